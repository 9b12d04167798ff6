#include "ckdim/growth.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ckdim/errors.hpp"

namespace ckdim {

std::string GrowthCoeff::str() const {
  if (concrete) {
    std::ostringstream os;
    os << value;
    return os.str();
  }
  return sign > 0 ? "+C" : "-C";
}

std::string GrowthTerm::str() const {
  std::ostringstream os;
  os << coeff.str();
  if (polydeg > 0) os << " * n^" << polydeg;
  os << " * (" << base.str() << ")^n";
  return os.str();
}

namespace {

// (base, polydeg) lexicographic; larger dominates.
int compare_keys(const GrowthTerm& x, const GrowthTerm& y) {
  int c = surd_compare(x.base, y.base);
  if (c != 0) return c;
  if (x.polydeg != y.polydeg) return x.polydeg < y.polydeg ? -1 : 1;
  return 0;
}

}  // namespace

void GrowthSum::normalize() {
  std::vector<GrowthTerm> merged;
  for (const auto& term : terms) {
    if (term.base.sign() <= 0 || surd_compare(term.base, QuadSurd(Rat(1))) < 0)
      throw std::invalid_argument("GrowthSum: base must be >= 1 exactly");
    if (term.coeff.concrete && term.coeff.value == 0) continue;
    bool absorbed = false;
    for (auto& existing : merged) {
      if (compare_keys(existing, term) != 0) continue;
      if (existing.coeff.concrete && term.coeff.concrete) {
        existing.coeff.value += term.coeff.value;
        absorbed = true;
        break;
      }
      if (!existing.coeff.concrete && !term.coeff.concrete &&
          existing.coeff.sign == term.coeff.sign) {
        absorbed = true;  // same-sign unknowns merge
        break;
      }
    }
    if (!absorbed) merged.push_back(term);
  }
  std::erase_if(merged, [](const GrowthTerm& t) { return t.coeff.concrete && t.coeff.value == 0; });
  std::stable_sort(merged.begin(), merged.end(),
                   [](const GrowthTerm& x, const GrowthTerm& y) { return compare_keys(x, y) > 0; });
  terms = std::move(merged);
}

GrowthTerm dominant_term(const GrowthSum& input) {
  if (input.terms.empty()) throw std::invalid_argument("dominant_term: empty sum");
  GrowthSum sum = input;
  sum.normalize();
  if (sum.terms.empty()) throw std::invalid_argument("dominant_term: sum is identically zero");
  const GrowthTerm& top = sum.terms.front();
  for (size_t i = 1; i < sum.terms.size(); ++i) {
    if (compare_keys(top, sum.terms[i]) == 0) {
      throw AmbiguousDominanceError(
          "dominant_term: tie between " + top.str() + " and " + sum.terms[i].str() +
          " cannot be resolved exactly");
    }
  }
  return top;
}

DivergesResult diverges(const GrowthSum& input) {
  GrowthSum sum = input;
  sum.normalize();
  if (sum.terms.empty())
    return {DivergesResult::Kind::InconclusiveBounded, {}, "sum is identically zero"};
  GrowthTerm top;
  try {
    top = dominant_term(sum);
  } catch (const AmbiguousDominanceError& e) {
    return {DivergesResult::Kind::InconclusiveAmbiguous, {}, e.what()};
  }
  if (top.coeff.effective_sign() <= 0)
    return {DivergesResult::Kind::InconclusiveBounded, {},
            "dominant term " + top.str() + " is not positive"};
  const bool base_gt_one = surd_compare(top.base, QuadSurd(Rat(1))) > 0;
  if (!base_gt_one && top.polydeg < 1)
    return {DivergesResult::Kind::InconclusiveBounded, {},
            "dominant term " + top.str() + " is bounded (base 1, degree 0)"};
  DivergenceCertificate cert;
  cert.dominant = top;
  for (const auto& term : sum.terms) {
    if (compare_keys(top, term) == 0) continue;
    int base_cmp = surd_compare(top.base, term.base);
    if (base_cmp > 0) {
      cert.chain.push_back("base (" + top.base.str() + ") > (" + term.base.str() +
                           ") dominates " + term.str());
    } else {
      cert.chain.push_back("equal base (" + top.base.str() + "), degree " +
                           std::to_string(top.polydeg) + " > " + std::to_string(term.polydeg) +
                           " dominates " + term.str());
    }
  }
  cert.reason = base_gt_one ? "positive dominant term with base > 1"
                            : "positive dominant term with base 1 and polynomial degree >= 1";
  return {DivergesResult::Kind::Diverges, cert, cert.reason};
}

QuadSurd evaluate_growth_sum(const GrowthSum& sum, long n) {
  if (n < 0) throw std::invalid_argument("evaluate_growth_sum: need n >= 0");
  QuadSurd total(Rat(0));
  for (const auto& term : sum.terms) {
    if (!term.coeff.concrete)
      throw ModeUnavailableError("evaluate_growth_sum: symbolic coefficient present");
    Rat scalar = term.coeff.value;
    scalar *= Rat(int_pow(Int(n), static_cast<unsigned long>(term.polydeg)));
    total = total + QuadSurd(scalar) * surd_pow(term.base, static_cast<unsigned long>(n));
  }
  return total;
}

CrossoverResult crossover(const GrowthSum& input, const Int& threshold, long horizon) {
  if (horizon < 1) throw std::invalid_argument("crossover: need horizon >= 1");
  GrowthSum sum = input;
  sum.normalize();
  for (const auto& term : sum.terms) {
    if (!term.coeff.concrete)
      throw ModeUnavailableError("crossover: symbolic coefficient present; only asymptotic mode is available");
  }
  const QuadSurd thresh((Rat(threshold)));
  std::vector<bool> ok(static_cast<size_t>(horizon) + 1, false);
  // incremental surd powers per term
  std::vector<QuadSurd> powers(sum.terms.size(), QuadSurd(Rat(1)));
  for (long n = 1; n <= horizon; ++n) {
    QuadSurd total(Rat(0));
    for (size_t i = 0; i < sum.terms.size(); ++i) {
      powers[i] = powers[i] * sum.terms[i].base;
      Rat scalar = sum.terms[i].coeff.value;
      scalar *= Rat(int_pow(Int(n), static_cast<unsigned long>(sum.terms[i].polydeg)));
      total = total + QuadSurd(scalar) * powers[i];
    }
    ok[static_cast<size_t>(n)] = (total - thresh).sign() >= 0;
  }
  // least n from which the value stays >= threshold through the horizon
  std::optional<long> best;
  for (long n = horizon; n >= 1; --n) {
    if (!ok[static_cast<size_t>(n)]) break;
    best = n;
  }
  return {best, horizon};
}

}  // namespace ckdim
