#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ckdim/growth.hpp"
#include "ckdim/ledger.hpp"
#include "ckdim/scenario.hpp"

namespace ckdim {

struct CrossoverOutcome {
  long n_min = 0;
  Int codim_value;        // certified lower bound at n_min
  Int f0_upper;
  std::vector<LedgerRow> ledger;
};

struct DivergenceOutcome {
  GrowthSum sum;
  DivergenceCertificate certificate;
};

struct InconclusiveOutcome {
  std::string kind;  // "horizon-exhausted", "ambiguous-dominance", "bounded"
  std::string reason;
};

struct Verdict {
  std::variant<CrossoverOutcome, DivergenceOutcome, InconclusiveOutcome> outcome;
  std::vector<std::string> conditionality;  // assumptions the verdict rides on
  std::vector<std::string> notes;

  bool conclusive() const { return outcome.index() != 2; }
};

// The per-case growth comparison used in asymptotic mode.
GrowthSum asymptotic_growth_sum(const Scenario& scenario);

// Crossover mode: minimal N in 1..horizon with codim_lower >= target.
// Asymptotic mode: divergence certificate from the growth algebra.
Verdict verify_dimension_hypothesis(const Scenario& scenario,
                                    const CacheConfig* cache = nullptr);

struct ChabautyParams {
  long g = 0;      // Albanese dimension
  long d = 0;      // variety dimension
  long r = 0;      // Mordell-Weil rank
  long delta = 0;  // Selmer correction term
};

struct ChabautyReport {
  bool holds = false;
  long slack = 0;
  std::string text;
};

ChabautyReport chabauty_check(const ChabautyParams& params);

// Restriction-of-scalars parameters: g = degF * gX, d = degF.
ChabautyParams restriction_params(long gX, long degF, long r, long delta);

struct CodimReport {
  bool triggers = false;
  long forced_dim_w = 0;  // meaningful when triggers
  std::string text;
};

CodimReport unlikely_codim_check(long dimX, long dimLocal, long codimZ);

}  // namespace ckdim
