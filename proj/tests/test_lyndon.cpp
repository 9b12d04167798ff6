#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ckdim/closed.hpp"
#include "ckdim/errors.hpp"
#include "ckdim/lyndon.hpp"

using namespace ckdim;

TEST_CASE("lyndon word recognition") {
  CHECK(is_lyndon("1"));
  CHECK(is_lyndon("12"));
  CHECK(is_lyndon("112"));
  CHECK(is_lyndon("122"));
  CHECK_FALSE(is_lyndon("21"));
  CHECK_FALSE(is_lyndon("11"));
  CHECK_FALSE(is_lyndon("1212"));
  CHECK_FALSE(is_lyndon("212"));
}

TEST_CASE("duval generation: counts match the Witt formula") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 12; ++n) {
      auto words = lyndon_words(m, n);
      CHECK(Int(words.size()) == witt_dim(m, n));
      for (size_t i = 0; i < words.size(); ++i) {
        CHECK(is_lyndon(words[i]));
        CHECK(words[i].size() == static_cast<size_t>(n));
        if (i > 0) CHECK(words[i - 1] < words[i]);  // lexicographic output
      }
    }
  }
}

TEST_CASE("standard factorization") {
  CHECK(standard_factorization("12") == std::pair<Word, Word>("1", "2"));
  CHECK(standard_factorization("112") == std::pair<Word, Word>("1", "12"));
  CHECK(standard_factorization("122") == std::pair<Word, Word>("12", "2"));
  CHECK(standard_factorization("1122") == std::pair<Word, Word>("1", "122"));
  CHECK(standard_factorization("1213") == std::pair<Word, Word>("12", "13"));
  // right factor is the longest Lyndon proper suffix
  for (const Word& w : lyndon_words(3, 6)) {
    auto [u, v] = standard_factorization(w);
    CHECK(u + v == w);
    CHECK(is_lyndon(u));
    CHECK(is_lyndon(v));
    CHECK(u < v);
  }
}

TEST_CASE("bracket of a Lyndon pair with standard-factorization shape is a basis word") {
  // u a letter, or rightfactor(u) >= v: [u, v] = basis(uv)
  LieVector b = bracket_words("1", "2");
  REQUIRE(b.coords.size() == 1);
  CHECK(b.coords.at("12") == Rat(1));
  b = bracket_words("12", "2");
  REQUIRE(b.coords.size() == 1);
  CHECK(b.coords.at("122") == Rat(1));
}

TEST_CASE("bracket antisymmetry and self-annihilation") {
  CHECK(bracket_words("2", "1").coords.at("12") == Rat(-1));
  CHECK(bracket_words("12", "12").is_zero());
  for (const Word& u : lyndon_words(2, 2))
    for (const Word& v : lyndon_words(2, 3)) {
      LieVector sum = bracket_words(u, v) + bracket_words(v, u);
      CHECK(sum.is_zero());
    }
}

TEST_CASE("bracket Jacobi rewrite, worked example") {
  // [[1,2],1] = -[1,[1,2]] = -basis(112)
  LieVector lhs = bracket(bracket_words("1", "2"), lie_basis_vector("1"));
  REQUIRE(lhs.coords.size() == 1);
  CHECK(lhs.coords.at("112") == Rat(-1));
}

TEST_CASE("jacobi identity on random-ish triples") {
  auto jacobi = [](const Word& x, const Word& y, const Word& z) {
    LieVector total = bracket(bracket_words(x, y), lie_basis_vector(z)) +
                      bracket(bracket_words(y, z), lie_basis_vector(x)) +
                      bracket(bracket_words(z, x), lie_basis_vector(y));
    return total.is_zero();
  };
  CHECK(jacobi("1", "2", "12"));
  CHECK(jacobi("1", "12", "122"));
  CHECK(jacobi("2", "112", "12"));
  CHECK(jacobi("1", "2", "3"));
  CHECK(jacobi("13", "2", "12"));
}

TEST_CASE("bracket output degree and homogeneity guards") {
  LieVector b = bracket_words("112", "12");
  CHECK(b.degree == 5);
  for (const auto& [w, c] : b.coords) {
    CHECK(w.size() == 5);
    CHECK(is_lyndon(w));
    CHECK(c != 0);
  }
  CHECK_THROWS_AS(bracket(lie_basis_vector("1") + lie_basis_vector("12"), lie_basis_vector("2")),
                  std::invalid_argument);
}

TEST_CASE("bracket spans exactly the Witt dimension in each degree") {
  // brackets [u, v] with |u|+|v| = n span the degree-n component
  for (int n = 2; n <= 6; ++n) {
    std::map<Word, int> seen;
    for (int k = 1; k < n; ++k)
      for (const Word& u : lyndon_words(2, k))
        for (const Word& v : lyndon_words(2, n - k))
          for (const auto& [w, c] : bracket_words(u, v).coords) seen[w] = 1;
    CHECK(Int(seen.size()) == witt_dim(2, n));
  }
}
