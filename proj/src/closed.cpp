#include "ckdim/closed.hpp"

#include <stdexcept>

#include "ckdim/errors.hpp"
#include "ckdim/oracle.hpp"

namespace ckdim {

long b1(const CurveShape& shape) {
  if (shape.genus < 0 || shape.punctures < 0)
    throw std::invalid_argument("CurveShape: genus and punctures must be nonnegative");
  if (!shape.hyperbolic())
    throw std::invalid_argument("CurveShape: shape is not hyperbolic (2 - 2g - s >= 0)");
  return shape.punctures == 0 ? 2 * shape.genus : 2 * shape.genus + shape.punctures - 1;
}

void QuotientSpec::validate() const {
  switch (kind) {
    case QuotientKind::FreeLcs:
    case QuotientKind::FreeMetabelian:
      if (param < 1) throw std::invalid_argument("QuotientSpec: generator count m must be >= 1");
      break;
    case QuotientKind::SurfaceLcs:
    case QuotientKind::SurfaceMetabelian:
      if (param < 2) throw std::invalid_argument("QuotientSpec: genus g must be >= 2");
      break;
    case QuotientKind::CmTruncation:
      break;
  }
}

std::string QuotientSpec::canonical() const {
  switch (kind) {
    case QuotientKind::FreeLcs: return "free_lcs(m=" + std::to_string(param) + ")";
    case QuotientKind::SurfaceLcs: return "surface_lcs(g=" + std::to_string(param) + ")";
    case QuotientKind::FreeMetabelian: return "free_metabelian(m=" + std::to_string(param) + ")";
    case QuotientKind::SurfaceMetabelian: return "surface_metabelian(g=" + std::to_string(param) + ")";
    case QuotientKind::CmTruncation: return "cm_truncation";
  }
  throw std::logic_error("QuotientSpec: bad kind");
}

const Int& GradedDims::at(long n) const {
  if (n < 1 || n > max_degree())
    throw std::out_of_range("GradedDims: degree out of range");
  return dims[static_cast<size_t>(n - 1)];
}

Int witt_dim(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("witt_dim: need m >= 1, n >= 1");
  Int sum = 0;
  for (long d : divisors(n)) {
    int mu = mobius(d);
    if (mu == 0) continue;
    sum += mu * int_pow(Int(m), static_cast<unsigned long>(n / d));
  }
  if (sum % n != 0) throw std::logic_error("witt_dim: Moebius sum not divisible by n");
  return sum / n;
}

Int surface_power_sum(long g, long d) {
  if (g < 2) throw std::invalid_argument("surface_power_sum: need g >= 2");
  if (d < 0) throw std::invalid_argument("surface_power_sum: need d >= 0");
  Int prev = 2, cur = 2 * g;
  if (d == 0) return prev;
  for (long i = 1; i < d; ++i) {
    Int next = 2 * g * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Int surface_lcs_dim(long g, long n) {
  if (g < 2) throw std::invalid_argument("surface_lcs_dim: need g >= 2");
  if (n < 1) throw std::invalid_argument("surface_lcs_dim: need n >= 1");
  Int sum = 0;
  for (long d : divisors(n)) {
    int mu = mobius(n / d);
    if (mu == 0) continue;
    sum += mu * surface_power_sum(g, d);
  }
  if (sum % n != 0) throw std::logic_error("surface_lcs_dim: Moebius sum not divisible by n");
  return sum / n;
}

Int free_metabelian_dim(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("free_metabelian_dim: need m >= 1, n >= 1");
  if (n == 1) return m;
  return (n - 1) * binomial(m + n - 2, n);
}

Int cm_truncation_dim(long n) {
  if (n < 1) throw std::invalid_argument("cm_truncation_dim: need n >= 1");
  if (n == 1) return 2;
  if (n == 2) return 1;
  return 2;
}

GradedDims graded_series(const QuotientSpec& spec, long N) {
  spec.validate();
  if (N < 1) throw std::invalid_argument("graded_series: need N >= 1");
  GradedDims out;
  out.dims.reserve(static_cast<size_t>(N));
  switch (spec.kind) {
    case QuotientKind::FreeLcs:
      for (long n = 1; n <= N; ++n) out.dims.push_back(witt_dim(spec.param, n));
      break;
    case QuotientKind::SurfaceLcs:
      for (long n = 1; n <= N; ++n) out.dims.push_back(surface_lcs_dim(spec.param, n));
      break;
    case QuotientKind::FreeMetabelian:
      for (long n = 1; n <= N; ++n) out.dims.push_back(free_metabelian_dim(spec.param, n));
      break;
    case QuotientKind::SurfaceMetabelian:
      out = surface_metabelian_dims_oracle(static_cast<int>(spec.param), N);
      break;
    case QuotientKind::CmTruncation:
      for (long n = 1; n <= N; ++n) out.dims.push_back(cm_truncation_dim(n));
      break;
  }
  return out;
}

bool is_oracle_backed(const QuotientSpec& spec) {
  return spec.kind == QuotientKind::SurfaceMetabelian;
}

}  // namespace ckdim
