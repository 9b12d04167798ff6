#pragma once

#include <string>

#include "ckdim/numbers.hpp"

namespace ckdim {

// Exact value a + b*sqrt(d) with d squarefree. d == 0 encodes a rational.
// All comparisons are by rational sign analysis and squaring.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(Rat a) : a_(std::move(a)) {}
  QuadSurd(long a) : a_(a) {}
  // Normalizes: extracts the square part of d, drops d when b == 0.
  QuadSurd(Rat a, Rat b, long d);

  const Rat& rational_part() const { return a_; }
  const Rat& surd_coeff() const { return b_; }
  long radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  int sign() const;

  QuadSurd operator-() const { return QuadSurd(-a_, -b_, d_); }
  // Throw std::invalid_argument when both operands are irrational with
  // different radicands.
  QuadSurd operator+(const QuadSurd& other) const;
  QuadSurd operator-(const QuadSurd& other) const { return *this + (-other); }
  QuadSurd operator*(const QuadSurd& other) const;

  // Deterministic rendering, e.g. "2", "3/2", "2+sqrt(3)", "1-2*sqrt(2)".
  std::string str() const;

 private:
  Rat a_ = 0;
  Rat b_ = 0;
  long d_ = 0;
};

// Exact total order consistent with real values; handles arbitrary
// radicand pairs via at most two squarings. Returns -1, 0, +1.
int surd_compare(const QuadSurd& x, const QuadSurd& y);

QuadSurd surd_pow(const QuadSurd& base, unsigned long exp);

// g + sqrt(g^2 - 1), normalized. Requires g >= 1.
QuadSurd surface_growth_base(long g);

}  // namespace ckdim
