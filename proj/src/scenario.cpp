#include "ckdim/scenario.hpp"

#include <stdexcept>

namespace ckdim {

long Scenario::d() const {
  return std::visit([](const auto& c) { return c.d; }, situation);
}

long Scenario::degF() const {
  if (const auto* c4 = std::get_if<Case4>(&situation)) return c4->degFprime;
  return std::visit([](const auto& c) -> long {
    if constexpr (requires { c.degF; })
      return c.degF;
    else
      return 1;
  }, situation);
}

void Scenario::validate() const {
  if (target_codim < 1) throw std::invalid_argument("Scenario: target_codim must be >= 1");
  if (horizon < 1) throw std::invalid_argument("Scenario: horizon must be >= 1");
  if (d() < 1 || d() > degF())
    throw std::invalid_argument("Scenario: need 1 <= d <= [F:Q]");
  if (const auto* c1 = std::get_if<Case1>(&situation)) {
    if (!c1->shape.hyperbolic())
      throw std::invalid_argument("Scenario case 1: curve shape must be hyperbolic");
  } else if (const auto* c2 = std::get_if<Case2>(&situation)) {
    if (c2->s < 3) throw std::invalid_argument("Scenario case 2: need s >= 3");
    if (c2->R < 0) throw std::invalid_argument("Scenario case 2: need R >= 0");
  } else if (const auto* c3 = std::get_if<Case3>(&situation)) {
    if (c3->n0 < 1) throw std::invalid_argument("Scenario case 3: need n0 >= 1");
    if (!c3->smalln_default &&
        static_cast<long>(c3->smalln_h1.size()) != c3->n0 - 1)
      throw std::invalid_argument("Scenario case 3: smalln_h1 must cover degrees 1..n0-1");
  } else if (const auto* c4 = std::get_if<Case4>(&situation)) {
    if (c4->gY < 2) throw std::invalid_argument("Scenario case 4: need gY >= 2");
  }
}

QuotientSpec Scenario::quotient() const {
  if (const auto* c1 = std::get_if<Case1>(&situation)) {
    if (c1->shape.punctures == 0) return {QuotientKind::SurfaceLcs, c1->shape.genus};
    return {QuotientKind::FreeLcs, b1(c1->shape)};
  }
  if (const auto* c2 = std::get_if<Case2>(&situation))
    return {QuotientKind::FreeLcs, c2->s - 1};
  if (std::get_if<Case3>(&situation)) return {QuotientKind::CmTruncation, 0};
  const auto& c4 = std::get<Case4>(situation);
  return {QuotientKind::SurfaceMetabelian, c4.gY};
}

}  // namespace ckdim
