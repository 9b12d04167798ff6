#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ckdim/closed.hpp"
#include "ckdim/errors.hpp"
#include "ckdim/lyndon.hpp"

using namespace ckdim;

TEST_CASE("witt dimensions, small table") {
  CHECK(witt_dim(2, 1) == 2);
  CHECK(witt_dim(2, 2) == 1);
  CHECK(witt_dim(2, 3) == 2);
  CHECK(witt_dim(2, 4) == 3);
  CHECK(witt_dim(2, 5) == 6);
  CHECK(witt_dim(2, 6) == 9);
  CHECK(witt_dim(3, 4) == 18);
  CHECK(witt_dim(1, 1) == 1);
  CHECK(witt_dim(1, 2) == 0);  // abelian on one generator
}

TEST_CASE("witt generating identity: sum of d*w_d over divisors equals m^n") {
  for (long m = 1; m <= 4; ++m) {
    for (long n = 1; n <= 12; ++n) {
      Int total = 0;
      for (long d : divisors(n)) total += d * witt_dim(m, d);
      CHECK(total == int_pow(Int(m), static_cast<unsigned long>(n)));
    }
  }
}

TEST_CASE("surface power sums match the quadratic roots") {
  // a_d = alpha^d + beta^d with alpha*beta = 1, alpha+beta = 2g
  for (long g = 2; g <= 5; ++g) {
    CHECK(surface_power_sum(g, 0) == 2);
    CHECK(surface_power_sum(g, 1) == 2 * g);
    for (long d = 2; d <= 20; ++d)
      CHECK(surface_power_sum(g, d) ==
            2 * g * surface_power_sum(g, d - 1) - surface_power_sum(g, d - 2));
  }
}

TEST_CASE("surface dimensions, frozen values at g=2") {
  const Int expected[] = {4, 5, 16, 45, 144};
  for (long n = 1; n <= 5; ++n) CHECK(surface_lcs_dim(2, n) == expected[n - 1]);
}

TEST_CASE("surface dimensions: integrality and necklace identity") {
  // the Moebius sum divides exactly, and sum_{d|n} d*w_d = a_n
  for (long g = 2; g <= 5; ++g) {
    for (long n = 1; n <= 40; ++n) {
      CHECK_NOTHROW(surface_lcs_dim(g, n));  // throws if division is inexact
      Int total = 0;
      for (long d : divisors(n)) total += d * surface_lcs_dim(g, d);
      CHECK(total == surface_power_sum(g, n));
    }
  }
}

TEST_CASE("surface asymptotics: n*w_n tracks alpha^n + beta^n") {
  // |n*w_n / a_n - 1| <= 0.02 at g=2, n=40, in exact rationals
  const long n = 40;
  Rat ratio = Rat(40 * surface_lcs_dim(2, n)) / Rat(surface_power_sum(2, n));
  Rat err = ratio - 1;
  if (err < 0) err = -err;
  CHECK(err <= Rat(2, 100));
}

TEST_CASE("free metabelian dimensions") {
  CHECK(free_metabelian_dim(2, 1) == 2);
  CHECK(free_metabelian_dim(2, 2) == 1);
  CHECK(free_metabelian_dim(2, 3) == 2);
  CHECK(free_metabelian_dim(2, 4) == 3);
  CHECK(free_metabelian_dim(2, 5) == 4);
  CHECK(free_metabelian_dim(2, 6) == 5);
  CHECK(free_metabelian_dim(4, 2) == 6);
  CHECK(free_metabelian_dim(4, 3) == 20);
  CHECK(free_metabelian_dim(4, 4) == 45);
  // closed form (n-1)*C(m+n-2, n) for n >= 2
  for (long m = 2; m <= 5; ++m)
    for (long n = 2; n <= 10; ++n)
      CHECK(free_metabelian_dim(m, n) == (n - 1) * binomial(m + n - 2, n));
}

TEST_CASE("cm truncation dimensions") {
  CHECK(cm_truncation_dim(1) == 2);
  CHECK(cm_truncation_dim(2) == 1);
  for (long n = 3; n <= 12; ++n) CHECK(cm_truncation_dim(n) == 2);
}

TEST_CASE("b1 of hyperbolic shapes") {
  CHECK(b1({2, 0}) == 4);
  CHECK(b1({0, 3}) == 2);
  CHECK(b1({1, 1}) == 2);
  CHECK(b1({1, 2}) == 3);
  CHECK_THROWS_AS(b1({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(b1({1, 0}), std::invalid_argument);
}

TEST_CASE("graded_series dispatch and canonical names") {
  QuotientSpec free2{QuotientKind::FreeLcs, 2};
  CHECK(free2.canonical() == "free_lcs(m=2)");
  GradedDims series = graded_series(free2, 6);
  for (long n = 1; n <= 6; ++n) CHECK(series.at(n) == witt_dim(2, n));

  QuotientSpec cm{QuotientKind::CmTruncation, 0};
  CHECK(cm.canonical() == "cm_truncation");
  CHECK_FALSE(is_oracle_backed(cm));

  QuotientSpec sm{QuotientKind::SurfaceMetabelian, 2};
  CHECK(is_oracle_backed(sm));
  CHECK_THROWS_AS(graded_series(sm, 100), FeasibilityError);

  QuotientSpec bad{QuotientKind::SurfaceLcs, 1};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
