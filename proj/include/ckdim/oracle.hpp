#pragma once

#include <optional>
#include <vector>

#include "ckdim/closed.hpp"
#include "ckdim/lyndon.hpp"

namespace ckdim {

// Envelope for the brute-force ideal computations.
inline constexpr int kMaxIdealAlphabet = 6;
inline constexpr long kMaxIdealDegree = 6;
// The metabelian basis grows polynomially, so it reaches further.
inline constexpr int kMaxMetabelianAlphabet = 8;
inline constexpr long kMaxMetabelianDegree = 8;

// Per-degree row-reduced bases of a graded ideal of the free Lie
// algebra on m letters. per_degree[n-1] holds the degree-n basis.
struct GradedIdealBasis {
  int alphabet = 0;
  std::vector<std::vector<LieVector>> per_degree;
};

// Saturates the homogeneous generators with brackets against the
// degree-1 generators and row-reduces with exact rationals.
GradedIdealBasis ideal_basis(const std::vector<LieVector>& generators, int m, long N);

// Dimensions of ideal_basis.
GradedDims ideal_graded_dims(const std::vector<LieVector>& generators, int m, long N);

// Sum of [a_i, b_i] with generator ordering a1, b1, ..., a_g, b_g.
LieVector surface_relator(int g);

// witt_dim(2g, n) minus the relator ideal dimension, per degree.
GradedDims surface_dims_oracle(int g, long N);

// Free metabelian Lie algebra on m generators (optionally modulo the
// metabelian ideal generated by the image of a homogeneous degree-2
// relator), over the reduced left-normed monomial basis.
GradedDims metabelian_dims_oracle(int m, long N, const std::optional<LieVector>& relator = {});

// Metabelian quotient of the genus-g surface algebra.
GradedDims surface_metabelian_dims_oracle(int g, long N);

// On two generators: dimensions of the quotient by the ideal of
// bidegree >= (2,2), counted on the Lyndon basis and validated by an
// ideal-closure check on the killed span.
GradedDims bigraded_truncation_dims_oracle(long N);

}  // namespace ckdim
