#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ckdim/numbers.hpp"

namespace ckdim {

// Words over the alphabet {1..m}, stored as digit characters '1'..'9'.
using Word = std::string;

inline constexpr int kMaxAlphabet = 9;
inline constexpr long kMaxBracketDegree = 16;

bool is_lyndon(const Word& w);

// All Lyndon words of length exactly n on m letters, lexicographic
// (Duval's generation). Count equals witt_dim(m, n).
std::vector<Word> lyndon_words(int m, int n);

// w = uv with v the lexicographically smallest (equivalently longest
// Lyndon) proper suffix. Requires |w| >= 2 and w Lyndon.
std::pair<Word, Word> standard_factorization(const Word& w);

// Homogeneous element of a free Lie algebra in the Lyndon basis:
// coordinates over standard bracketings of Lyndon words of one length.
struct LieVector {
  long degree = 0;
  std::map<Word, Rat> coords;

  bool is_zero() const { return coords.empty(); }

  LieVector& operator+=(const LieVector& other);
  LieVector& operator*=(const Rat& scalar);
  friend LieVector operator+(LieVector a, const LieVector& b) { return a += b; }
  friend LieVector operator*(LieVector a, const Rat& s) { return a *= s; }
  friend LieVector operator-(LieVector a) { return a *= Rat(-1); }
  bool operator==(const LieVector& other) const = default;
};

// Basis vector for a Lyndon word (its standard bracketing).
LieVector lie_basis_vector(const Word& lyndon);

// Lie bracket of two Lyndon basis elements, expanded in the Lyndon
// basis by the classical rewrite (antisymmetry + Jacobi against the
// standard factorization).
LieVector bracket_words(const Word& u, const Word& v);

// Bilinear extension. Throws FeasibilityError past kMaxBracketDegree
// and std::invalid_argument on inhomogeneous input.
LieVector bracket(const LieVector& u, const LieVector& v);

}  // namespace ckdim
