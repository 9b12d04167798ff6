#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckdim/surd.hpp"

namespace ckdim {

// Coefficient of a growth term: an exact rational, or a constant of
// unknown magnitude carrying only its sign ("pos-unknown").
struct GrowthCoeff {
  bool concrete = true;
  Rat value = 0;       // used when concrete
  int sign = 1;        // +1 or -1; for concrete coefficients derived from value

  static GrowthCoeff exact(Rat v) { return {true, std::move(v), 0}; }
  static GrowthCoeff unknown(int sign) { return {false, 0, sign}; }

  int effective_sign() const { return concrete ? rat_sign(value) : sign; }
  std::string str() const;
};

// c * n^k * base^n with base >= 1 exactly.
struct GrowthTerm {
  GrowthCoeff coeff;
  long polydeg = 0;
  QuadSurd base = QuadSurd(Rat(1));

  std::string str() const;
};

struct GrowthSum {
  std::vector<GrowthTerm> terms;

  // Merge concrete coefficients (and same-sign unknowns) sharing a
  // (polydeg, base) pair; drop exact zeros. Terms end up sorted by
  // (base, polydeg) descending.
  void normalize();
};

// Maximal term under (base, polydeg) lexicographic order. Throws
// AmbiguousDominanceError when the top slot mixes an unknown with a
// concrete coefficient (or opposite-sign unknowns).
GrowthTerm dominant_term(const GrowthSum& sum);

struct DivergenceCertificate {
  GrowthTerm dominant;
  std::vector<std::string> chain;  // ordered comparisons beating every other term
  std::string reason;              // why the dominant term forces divergence
};

struct DivergesResult {
  enum class Kind { Diverges, InconclusiveBounded, InconclusiveAmbiguous };
  Kind kind;
  std::optional<DivergenceCertificate> certificate;
  std::string reason;
};

DivergesResult diverges(const GrowthSum& sum);

struct CrossoverResult {
  std::optional<long> n_min;  // empty: none within horizon
  long horizon = 0;
};

// Exact evaluation at n = 1..horizon. Returns the least n from which
// the sum stays >= threshold through the horizon. Requires all
// coefficients concrete (ModeUnavailableError otherwise).
CrossoverResult crossover(const GrowthSum& sum, const Int& threshold, long horizon);

// Exact value of the sum at n (all coefficients concrete).
QuadSurd evaluate_growth_sum(const GrowthSum& sum, long n);

}  // namespace ckdim
