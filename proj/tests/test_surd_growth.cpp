#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ckdim/errors.hpp"
#include "ckdim/growth.hpp"
#include "ckdim/surd.hpp"

using namespace ckdim;

TEST_CASE("surd normalization") {
  QuadSurd q(Rat(1), Rat(2), 8);  // 1 + 2*sqrt(8) = 1 + 4*sqrt(2)
  CHECK(q.radicand() == 2);
  CHECK(q.surd_coeff() == Rat(4));
  QuadSurd r(Rat(3), Rat(5), 1);  // 3 + 5*sqrt(1) = 8
  CHECK(r.is_rational());
  CHECK(r.rational_part() == Rat(8));
  QuadSurd z(Rat(7), Rat(0), 3);
  CHECK(z.is_rational());
  QuadSurd s(Rat(0), Rat(1), 9);  // sqrt(9) = 3
  CHECK(s.is_rational());
  CHECK(s.rational_part() == Rat(3));
}

TEST_CASE("surd arithmetic and sign") {
  QuadSurd a(Rat(2), Rat(1), 3);   // 2 + sqrt(3)
  QuadSurd b(Rat(2), Rat(-1), 3);  // 2 - sqrt(3)
  CHECK((a * b).is_rational());
  CHECK((a * b).rational_part() == Rat(1));  // conjugates multiply to 4 - 3
  CHECK((a + b).rational_part() == Rat(4));
  CHECK(a.sign() == 1);
  CHECK(b.sign() == 1);
  CHECK((-a).sign() == -1);
  CHECK(QuadSurd(Rat(-2), Rat(1), 3).sign() == -1);   // sqrt(3) < 2
  CHECK(QuadSurd(Rat(-1), Rat(1), 3).sign() == 1);    // sqrt(3) > 1
  CHECK(QuadSurd(Rat(0)).sign() == 0);
  QuadSurd c(Rat(0), Rat(1), 2);
  CHECK_THROWS_AS(a + c, std::invalid_argument);  // mixed radicands
}

TEST_CASE("surd comparison across radicands") {
  CHECK(surd_compare(QuadSurd(Rat(0), Rat(1), 2), QuadSurd(Rat(0), Rat(1), 3)) == -1);
  CHECK(surd_compare(QuadSurd(Rat(0), Rat(1), 8), QuadSurd(Rat(0), Rat(2), 2)) == 0);
  CHECK(surd_compare(QuadSurd(Rat(2), Rat(1), 3), QuadSurd(Rat(4))) == -1);  // 2+sqrt3 < 4
  CHECK(surd_compare(QuadSurd(Rat(2), Rat(1), 3), QuadSurd(Rat(1), Rat(1), 5)) == 1);
  CHECK(surd_compare(surface_growth_base(2), QuadSurd(Rat(2))) == 1);
  CHECK(surd_compare(surface_growth_base(2), QuadSurd(Rat(4))) == -1);
}

TEST_CASE("surd powers") {
  QuadSurd a(Rat(2), Rat(1), 3);
  QuadSurd p = surd_pow(a, 3);  // (2+sqrt3)^3 = 26 + 15 sqrt3
  CHECK(p.rational_part() == Rat(26));
  CHECK(p.surd_coeff() == Rat(15));
  CHECK(surd_pow(a, 0).rational_part() == Rat(1));
  // a^n * conj(a)^n = 1
  QuadSurd conj(Rat(2), Rat(-1), 3);
  QuadSurd prod = surd_pow(a, 7) * surd_pow(conj, 7);
  CHECK(prod.is_rational());
  CHECK(prod.rational_part() == Rat(1));
}

TEST_CASE("surd rendering is deterministic") {
  CHECK(QuadSurd(Rat(2), Rat(1), 3).str() == "2+sqrt(3)");
  CHECK(QuadSurd(Rat(2)).str() == "2");
  CHECK(QuadSurd(Rat(3, 2)).str() == "3/2");
  CHECK(QuadSurd(Rat(1), Rat(-2), 2).str() == "1-2*sqrt(2)");
}

TEST_CASE("growth sum normalization merges and sorts") {
  GrowthSum sum;
  sum.terms.push_back({GrowthCoeff::exact(Rat(2)), 1, QuadSurd(Rat(2))});
  sum.terms.push_back({GrowthCoeff::exact(Rat(3)), 1, QuadSurd(Rat(2))});
  sum.terms.push_back({GrowthCoeff::exact(Rat(1)), 0, QuadSurd(Rat(3))});
  sum.terms.push_back({GrowthCoeff::exact(Rat(-1)), 0, QuadSurd(Rat(3))});
  sum.normalize();
  REQUIRE(sum.terms.size() == 1);  // zero term dropped
  CHECK(sum.terms[0].coeff.value == Rat(5));
  CHECK(sum.terms[0].polydeg == 1);
}

TEST_CASE("dominant term ordering: base first, then polynomial degree") {
  GrowthSum sum;
  sum.terms.push_back({GrowthCoeff::exact(Rat(1)), 9, QuadSurd(Rat(2))});
  sum.terms.push_back({GrowthCoeff::exact(Rat(1)), 0, surface_growth_base(2)});
  sum.normalize();
  GrowthTerm top = dominant_term(sum);
  CHECK(top.polydeg == 0);
  CHECK(surd_compare(top.base, surface_growth_base(2)) == 0);
}

TEST_CASE("dominance is numeric: sum/dominant approaches the dominant coefficient") {
  GrowthSum sum;
  sum.terms.push_back({GrowthCoeff::exact(Rat(3)), 0, QuadSurd(Rat(2))});
  sum.terms.push_back({GrowthCoeff::exact(Rat(-1)), 4, QuadSurd(Rat(1))});
  sum.normalize();
  GrowthTerm top = dominant_term(sum);
  const long n = 200;
  QuadSurd value = evaluate_growth_sum(sum, n);
  REQUIRE(value.is_rational());
  Rat term_value = top.coeff.value * Rat(int_pow(Int(2), n));
  Rat ratio = value.rational_part() / term_value;
  Rat err = ratio - 1;
  if (err < 0) err = -err;
  CHECK(err <= Rat(5, 100));
}

TEST_CASE("divergence decisions") {
  GrowthSum grows;
  grows.terms.push_back({GrowthCoeff::unknown(+1), 0, surface_growth_base(2)});
  grows.terms.push_back({GrowthCoeff::unknown(-1), 5, QuadSurd(Rat(2))});
  grows.normalize();
  DivergesResult r = diverges(grows);
  CHECK(r.kind == DivergesResult::Kind::Diverges);
  REQUIRE(r.certificate);
  CHECK(!r.certificate->chain.empty());

  GrowthSum flat;
  flat.terms.push_back({GrowthCoeff::unknown(+1), 0, QuadSurd(Rat(1))});
  flat.normalize();
  CHECK(diverges(flat).kind == DivergesResult::Kind::InconclusiveBounded);

  GrowthSum poly;
  poly.terms.push_back({GrowthCoeff::unknown(+1), 1, QuadSurd(Rat(1))});
  poly.terms.push_back({GrowthCoeff::unknown(-1), 0, QuadSurd(Rat(1))});
  poly.normalize();
  CHECK(diverges(poly).kind == DivergesResult::Kind::Diverges);

  GrowthSum negative;
  negative.terms.push_back({GrowthCoeff::unknown(-1), 0, QuadSurd(Rat(2))});
  negative.normalize();
  CHECK(diverges(negative).kind == DivergesResult::Kind::InconclusiveBounded);

  GrowthSum ambiguous;  // +C and -C at the same (degree, base) slot
  ambiguous.terms.push_back({GrowthCoeff::unknown(+1), 0, QuadSurd(Rat(2))});
  ambiguous.terms.push_back({GrowthCoeff::unknown(-1), 0, QuadSurd(Rat(2))});
  ambiguous.normalize();
  CHECK(diverges(ambiguous).kind == DivergesResult::Kind::InconclusiveAmbiguous);
}

TEST_CASE("divergence certificates are deterministic") {
  auto make = [] {
    GrowthSum sum;
    sum.terms.push_back({GrowthCoeff::unknown(+1), 0, surface_growth_base(2)});
    sum.terms.push_back({GrowthCoeff::unknown(-1), 3, QuadSurd(Rat(2))});
    sum.normalize();
    return diverges(sum);
  };
  DivergesResult a = make(), b = make();
  REQUIRE(a.certificate);
  REQUIRE(b.certificate);
  CHECK(a.certificate->chain == b.certificate->chain);
  CHECK(a.certificate->reason == b.certificate->reason);
  CHECK(a.certificate->dominant.str() == b.certificate->dominant.str());
}

TEST_CASE("crossover fixtures") {
  GrowthSum quad;  // n^2 - 10 >= 0 from n = 4 on
  quad.terms.push_back({GrowthCoeff::exact(Rat(1)), 2, QuadSurd(Rat(1))});
  quad.terms.push_back({GrowthCoeff::exact(Rat(-10)), 0, QuadSurd(Rat(1))});
  quad.normalize();
  CrossoverResult r = crossover(quad, 0, 100);
  REQUIRE(r.n_min);
  CHECK(*r.n_min == 4);

  GrowthSum dip;  // 2^n - n^4 dips negative and recovers at n = 16
  dip.terms.push_back({GrowthCoeff::exact(Rat(1)), 0, QuadSurd(Rat(2))});
  dip.terms.push_back({GrowthCoeff::exact(Rat(-1)), 4, QuadSurd(Rat(1))});
  dip.normalize();
  r = crossover(dip, 0, 100);
  REQUIRE(r.n_min);
  CHECK(*r.n_min == 16);

  GrowthSum never;
  never.terms.push_back({GrowthCoeff::exact(Rat(-1)), 0, QuadSurd(Rat(2))});
  never.normalize();
  CHECK_FALSE(crossover(never, 0, 50).n_min);

  GrowthSum symbolic;
  symbolic.terms.push_back({GrowthCoeff::unknown(+1), 0, QuadSurd(Rat(2))});
  CHECK_THROWS_AS(crossover(symbolic, 0, 10), ModeUnavailableError);
}

TEST_CASE("diverges soundness: certified concrete sums cross every threshold") {
  GrowthSum sum;
  sum.terms.push_back({GrowthCoeff::exact(Rat(1)), 0, QuadSurd(Rat(2))});
  sum.terms.push_back({GrowthCoeff::exact(Rat(-1)), 4, QuadSurd(Rat(1))});
  sum.normalize();
  REQUIRE(diverges(sum).kind == DivergesResult::Kind::Diverges);
  for (Int threshold : {Int(0), Int(1), Int(1000), Int(1000000)}) {
    CrossoverResult r = crossover(sum, threshold, 200);
    CHECK(r.n_min.has_value());
  }
}

TEST_CASE("invalid growth bases are rejected") {
  GrowthSum sum;
  sum.terms.push_back({GrowthCoeff::exact(Rat(1)), 0, QuadSurd(Rat(1, 2))});
  CHECK_THROWS_AS(sum.normalize(), std::invalid_argument);
}
