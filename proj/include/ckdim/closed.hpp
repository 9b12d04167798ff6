#pragma once

#include <string>
#include <vector>

#include "ckdim/numbers.hpp"

namespace ckdim {

// A smooth curve given by genus and puncture count.
struct CurveShape {
  long genus = 0;
  long punctures = 0;

  bool hyperbolic() const { return 2 - 2 * genus - punctures < 0; }
};

// First Betti number: 2g for compact, 2g + s - 1 otherwise.
// Throws std::invalid_argument on non-hyperbolic shapes.
long b1(const CurveShape& shape);

enum class QuotientKind {
  FreeLcs,            // free Lie algebra on m generators, lower central series grading
  SurfaceLcs,         // genus-g surface group Lie algebra
  FreeMetabelian,     // free metabelian Lie algebra on m generators
  SurfaceMetabelian,  // metabelian quotient of the genus-g surface algebra
  CmTruncation,       // two generators modulo the ideal of bidegree >= (2,2)
};

struct QuotientSpec {
  QuotientKind kind = QuotientKind::FreeLcs;
  long param = 0;  // m for free kinds, g for surface kinds; unused for CmTruncation

  void validate() const;          // m >= 1, g >= 2
  std::string canonical() const;  // stable key, e.g. "free_lcs(m=2)"
};

// Exact graded dimension series, degrees 1..N contiguous.
struct GradedDims {
  std::vector<Int> dims;

  long max_degree() const { return static_cast<long>(dims.size()); }
  const Int& at(long n) const;  // 1-based degree
};

// Dimension of the degree-n component of the free Lie algebra on m
// generators: (1/n) sum_{d|n} mu(d) m^{n/d}. The division is exact.
Int witt_dim(long m, long n);

// Integer recurrence a_0 = 2, a_1 = 2g, a_d = 2g a_{d-1} - a_{d-2},
// so a_d = alpha^d + beta^d for the roots of x^2 - 2g x + 1.
Int surface_power_sum(long g, long d);

// Degree-n dimension for the genus-g surface algebra:
// w_n = (1/n) sum_{d|n} mu(n/d) a_d. Requires g >= 2; division is exact.
Int surface_lcs_dim(long g, long n);

// m for n = 1, (n-1) * C(m+n-2, n) for n >= 2.
Int free_metabelian_dim(long m, long n);

// Two generators modulo bidegree >= (2,2): 2, 1, then 2 for n >= 3.
Int cm_truncation_dim(long n);

// Batch evaluation for degrees 1..N. SurfaceMetabelian has no closed
// form and is delegated to the brute-force oracle (FeasibilityError
// beyond its envelope).
GradedDims graded_series(const QuotientSpec& spec, long N);

// True when graded_series(spec, *) is oracle-backed rather than closed-form.
bool is_oracle_backed(const QuotientSpec& spec);

}  // namespace ckdim
