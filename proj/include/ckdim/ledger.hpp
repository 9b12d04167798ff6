#pragma once

#include <variant>
#include <vector>

#include "ckdim/cache.hpp"
#include "ckdim/growth.hpp"
#include "ckdim/scenario.hpp"

namespace ckdim {

struct DimInterval {
  Int lo, hi;
};

// Per-degree interval [lo(n), hi(n)] for the graded dimension of the
// global quotient, from d * zx(n) <= dim <= [F:Q] * zx(n).
struct DimIntervalSeries {
  std::vector<DimInterval> intervals;  // index n-1

  long max_degree() const { return static_cast<long>(intervals.size()); }
  const DimInterval& at(long n) const;
};

DimIntervalSeries sandwich_interval(const GradedDims& zx, long d, long degF);

// floor(lo/2) for odd n; 0 for even n (no even-degree information).
Int zplus_lower(long n, const Int& lo);

// h2_upper + m - zplus_low, from the global Euler characteristic with
// H^0 = 0 and the H^2 / Z^+ terms replaced by their safe bounds.
Int h1_upper_euler(long n, const Int& m, const Int& h2_upper, const Int& zplus_low);

// Tate-twist cost: R*m at n = 1, 0 for even n, m for odd n >= 3.
Int h1_upper_soule(long n, const Int& m, const Int& R);

struct LedgerRow {
  long n = 0;
  Int zx_dim;
  DimInterval interval;
  Int h1_upper;             // cost evaluated at the minimizing endpoint
  Int local_contrib_lower;  // the minimizing endpoint m*
  Int codim_contrib_lower;  // min over the interval of m - h1_upper(m)
};

// H^1 cost bound at dimension value m for degree n of the scenario's
// cost model (affine in m).
Int h1_upper_for(const Scenario& scenario, long n, const Int& m, const Int& lo);

// Cumulative F^0 bound up to level N: an exact integer in crossover
// mode, a growth term in asymptotic mode. Throws ModeUnavailableError
// when crossover mode lacks concrete constants.
std::variant<Int, GrowthTerm> f0_cumulative_upper(const Scenario& scenario, long N);

struct CodimBound {
  Int value;
  std::vector<LedgerRow> rows;
  Int f0_upper;
};

// Certified lower bound for the codimension of the global Selmer image
// at level N: sum of per-row minima minus the cumulative F^0 bound.
CodimBound codim_lower(const Scenario& scenario, long N);

// Rows 1..N for the scenario (shared by codim_lower and the verifier).
// A cache config, when given, backs the graded series lookup.
std::vector<LedgerRow> build_ledger_rows(const Scenario& scenario, long N,
                                         const CacheConfig* cache = nullptr);

}  // namespace ckdim
