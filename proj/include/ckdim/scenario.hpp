#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ckdim/closed.hpp"
#include "ckdim/numbers.hpp"

namespace ckdim {

enum class VerifyMode { Crossover, Asymptotic };

// Hyperbolic curve over a degree-degF field, dominated d-fold.
struct Case1 {
  CurveShape shape;
  long d = 1;
  long degF = 1;
  // coefficients (constant first) of the polynomial P with
  // H^2 cost bounded by P(n) * g^n; required for crossover mode
  std::optional<std::vector<Rat>> h2_poly;
};

// Projective line minus s >= 3 points (mixed Tate).
struct Case2 {
  long s = 3;
  long d = 1;
  long degF = 1;
  Int R = 0;  // dimension of the weight-1 cohomology cost factor
};

// Punctured CM elliptic curve.
struct Case3 {
  long d = 1;
  long degF = 1;
  long n0 = 1;                  // degree from which the H^2 cost vanishes
  std::vector<Int> smalln_h1;   // per-degree H^1 bounds for n = 1..n0-1
  bool smalln_default = true;   // true: no user bounds; those rows contribute 0
};

// Curve dominating a genus gY >= 2 curve with CM Jacobian.
struct Case4 {
  long gY = 2;
  long d = 1;
  long degFprime = 1;
  struct Constants {
    Rat A;     // informational scale of the local growth
    Rat c_h2;  // H^2 cost bound c_h2 * n^(2g-2)
    Rat c_f0;  // per-degree F^0 bound c_f0 * n^g
  };
  std::optional<Constants> constants;  // required for crossover mode
};

struct Scenario {
  std::variant<Case1, Case2, Case3, Case4> situation;
  long target_codim = 1;
  VerifyMode mode = VerifyMode::Crossover;
  long horizon = 20;

  int case_index() const { return static_cast<int>(situation.index()) + 1; }
  long d() const;
  long degF() const;
  void validate() const;  // throws std::invalid_argument

  // Graded dimension series of the relevant quotient for this case.
  QuotientSpec quotient() const;
};

}  // namespace ckdim
