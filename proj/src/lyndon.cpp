#include "ckdim/lyndon.hpp"

#include <stdexcept>

#include "ckdim/errors.hpp"

namespace ckdim {

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  const size_t n = w.size();
  for (size_t i = 1; i < n; ++i) {
    // compare w against its rotation starting at i
    if (w.compare(w.substr(i) + w.substr(0, i)) >= 0) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int m, int n) {
  if (m < 1 || m > kMaxAlphabet || n < 1)
    throw std::invalid_argument("lyndon_words: need 1 <= m <= 9, n >= 1");
  std::vector<Word> out;
  // Duval's algorithm, filtered to length exactly n.
  std::string w = "1";
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    // extend periodically to length n, then increment
    size_t k = w.size();
    while (w.size() < static_cast<size_t>(n)) w.push_back(w[w.size() % k]);
    while (!w.empty() && w.back() == static_cast<char>('0' + m)) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("standard_factorization: need |w| >= 2");
  // the smallest proper suffix is the longest Lyndon proper suffix
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i) {
    if (w.compare(i, Word::npos, w, best, Word::npos) < 0) best = i;
  }
  return {w.substr(0, best), w.substr(best)};
}

LieVector& LieVector::operator+=(const LieVector& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    *this = other;
    return *this;
  }
  if (degree != other.degree)
    throw std::invalid_argument("LieVector: cannot add inhomogeneous vectors");
  for (const auto& [w, c] : other.coords) {
    Rat& slot = coords[w];
    slot += c;
    if (slot == 0) coords.erase(w);
  }
  return *this;
}

LieVector& LieVector::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coords.clear();
    return *this;
  }
  for (auto& [w, c] : coords) c *= scalar;
  return *this;
}

LieVector lie_basis_vector(const Word& lyndon) {
  if (!is_lyndon(lyndon)) throw std::invalid_argument("lie_basis_vector: word is not Lyndon");
  LieVector v;
  v.degree = static_cast<long>(lyndon.size());
  v.coords[lyndon] = 1;
  return v;
}

LieVector bracket_words(const Word& u, const Word& v) {
  const long deg = static_cast<long>(u.size() + v.size());
  if (deg > kMaxBracketDegree)
    throw FeasibilityError("bracket: degree exceeds feasibility bound", kMaxBracketDegree);
  if (u == v) return LieVector{deg, {}};
  if (u > v) return -bracket_words(v, u);
  // u < v: uv is Lyndon. Its standard factorization is (u, v) exactly
  // when u is a letter or the right factor of u is >= v.
  if (u.size() == 1 || standard_factorization(u).second >= v) {
    return lie_basis_vector(u + v);
  }
  // Otherwise u = [u1, u2] with u2 < v; apply Jacobi:
  // [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]]
  auto [u1, u2] = standard_factorization(u);
  return bracket(bracket_words(u1, v), lie_basis_vector(u2)) +
         bracket(lie_basis_vector(u1), bracket_words(u2, v));
}

LieVector bracket(const LieVector& u, const LieVector& v) {
  if (u.is_zero() || v.is_zero()) return LieVector{u.degree + v.degree, {}};
  LieVector out;
  out.degree = u.degree + v.degree;
  for (const auto& [uw, uc] : u.coords) {
    for (const auto& [vw, vc] : v.coords) {
      LieVector term = bracket_words(uw, vw);
      term *= uc * vc;
      out += term;
    }
  }
  out.degree = u.degree + v.degree;  // += on zero may have reset it
  return out;
}

}  // namespace ckdim
