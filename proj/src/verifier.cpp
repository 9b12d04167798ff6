#include "ckdim/verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "ckdim/errors.hpp"

namespace ckdim {

namespace {

std::vector<std::string> conditionality_for(const Scenario& scenario) {
  std::vector<std::string> out;
  out.push_back("ax_schanuel_for_unipotent_variations");
  switch (scenario.case_index()) {
    case 1:
      out.push_back("fontaine_mazur_or_bloch_kato");
      break;
    case 3: {
      const auto& c3 = std::get<Case3>(scenario.situation);
      out.push_back("h2_vanishing_threshold_n0_user_supplied");
      if (c3.smalln_default && c3.n0 > 1)
        out.push_back("small_degree_h1_rows_assumed_non_contributing");
      break;
    }
    case 4:
      if (scenario.mode == VerifyMode::Crossover)
        out.push_back("user_supplied_growth_constants");
      break;
    default:
      break;
  }
  return out;
}

std::vector<std::string> notes_for(const Scenario& scenario) {
  std::vector<std::string> out;
  if (scenario.case_index() == 3) {
    out.push_back(
        "degree-2 graded dimension is 1 per the brute-force oracle; the two-character "
        "description would give 2 (bound direction unaffected)");
  }
  out.push_back(
      "verdict concerns the Selmer codimension growth only; no claim about point sets");
  return out;
}

}  // namespace

GrowthSum asymptotic_growth_sum(const Scenario& scenario) {
  scenario.validate();
  GrowthSum sum;
  switch (scenario.case_index()) {
    case 1: {
      const auto& c1 = std::get<Case1>(scenario.situation);
      const long g = c1.shape.genus;
      QuadSurd gain_base = c1.shape.punctures == 0 ? surface_growth_base(g)
                                                   : QuadSurd(Rat(b1(c1.shape)));
      sum.terms.push_back({GrowthCoeff::unknown(+1), 0, gain_base});
      if (g >= 1) {
        long h2_deg = c1.h2_poly ? std::max<long>(0, static_cast<long>(c1.h2_poly->size()) - 1) : 0;
        sum.terms.push_back({GrowthCoeff::unknown(-1), h2_deg, QuadSurd(Rat(g))});
        sum.terms.push_back({GrowthCoeff::unknown(-1), 0, QuadSurd(Rat(g))});
      }
      break;
    }
    case 2: {
      const auto& c2 = std::get<Case2>(scenario.situation);
      sum.terms.push_back({GrowthCoeff::unknown(+1), 0, QuadSurd(Rat(c2.s - 1))});
      sum.terms.push_back({GrowthCoeff::unknown(-1), 0, QuadSurd(Rat(1))});
      break;
    }
    case 3: {
      sum.terms.push_back({GrowthCoeff::unknown(+1), 1, QuadSurd(Rat(1))});
      sum.terms.push_back({GrowthCoeff::unknown(-1), 0, QuadSurd(Rat(1))});
      break;
    }
    case 4: {
      const auto& c4 = std::get<Case4>(scenario.situation);
      sum.terms.push_back({GrowthCoeff::unknown(+1), 2 * c4.gY - 1, QuadSurd(Rat(1))});
      sum.terms.push_back({GrowthCoeff::unknown(-1), 2 * c4.gY - 2, QuadSurd(Rat(1))});
      sum.terms.push_back({GrowthCoeff::unknown(-1), c4.gY, QuadSurd(Rat(1))});
      break;
    }
  }
  return sum;
}

Verdict verify_dimension_hypothesis(const Scenario& scenario, const CacheConfig* cache) {
  scenario.validate();
  Verdict verdict;
  verdict.conditionality = conditionality_for(scenario);
  verdict.notes = notes_for(scenario);
  if (scenario.mode == VerifyMode::Asymptotic) {
    GrowthSum sum = asymptotic_growth_sum(scenario);
    sum.normalize();
    DivergesResult result = diverges(sum);
    switch (result.kind) {
      case DivergesResult::Kind::Diverges:
        verdict.outcome = DivergenceOutcome{sum, *result.certificate};
        break;
      case DivergesResult::Kind::InconclusiveAmbiguous:
        verdict.outcome = InconclusiveOutcome{"ambiguous-dominance", result.reason};
        break;
      case DivergesResult::Kind::InconclusiveBounded:
        verdict.outcome = InconclusiveOutcome{"bounded", result.reason};
        break;
    }
    return verdict;
  }
  // Crossover mode. Rows 1..N are shared across levels; scan prefixes.
  std::vector<LedgerRow> rows = build_ledger_rows(scenario, scenario.horizon, cache);
  Int prefix = 0;
  for (long N = 1; N <= scenario.horizon; ++N) {
    prefix += rows[static_cast<size_t>(N - 1)].codim_contrib_lower;
    Scenario view = scenario;
    Int f0 = std::get<Int>(f0_cumulative_upper(view, N));
    Int value = prefix - f0;
    if (value >= scenario.target_codim) {
      CrossoverOutcome outcome;
      outcome.n_min = N;
      outcome.codim_value = value;
      outcome.f0_upper = f0;
      outcome.ledger.assign(rows.begin(), rows.begin() + N);
      verdict.outcome = std::move(outcome);
      return verdict;
    }
  }
  verdict.outcome = InconclusiveOutcome{
      "horizon-exhausted", "codimension bound below target through level " +
                               std::to_string(scenario.horizon)};
  return verdict;
}

ChabautyReport chabauty_check(const ChabautyParams& params) {
  if (params.g < 0 || params.d < 0 || params.r < 0 || params.delta < 0)
    throw std::invalid_argument("chabauty_check: parameters must be nonnegative");
  ChabautyReport report;
  report.slack = (params.g - params.d) - (params.r + params.delta);
  report.holds = report.slack >= 0;
  if (report.holds) {
    report.text =
        "r + delta <= g - d holds (slack " + std::to_string(report.slack) +
        "): the closure of the rational locus is contained in a finite union of cosets of "
        "proper abelian subvarieties; no finiteness claim is implied";
  } else {
    report.text = "r + delta <= g - d fails (slack " + std::to_string(report.slack) +
                  "): no conclusion available";
  }
  return report;
}

ChabautyParams restriction_params(long gX, long degF, long r, long delta) {
  if (gX < 2) throw std::invalid_argument("restriction_params: need gX >= 2 (hyperbolic context)");
  if (degF < 1) throw std::invalid_argument("restriction_params: need degF >= 1");
  ChabautyParams params{degF * gX, degF, r, delta};
  if (params.g - params.d != degF * (gX - 1))
    throw std::logic_error("restriction_params: identity g - d = degF*(gX - 1) failed");
  return params;
}

CodimReport unlikely_codim_check(long dimX, long dimLocal, long codimZ) {
  if (dimX < 0 || dimLocal < 0 || codimZ < 0)
    throw std::invalid_argument("unlikely_codim_check: inputs must be nonnegative");
  if (codimZ > dimLocal)
    throw std::invalid_argument("unlikely_codim_check: codimZ exceeds the local dimension");
  CodimReport report;
  report.triggers = codimZ >= dimX;
  const long forced = dimX - codimZ;
  report.forced_dim_w = std::max<long>(forced, 0);
  // codim(W) >= codim(V) + codim(Gamma) with V = X x Z forces
  // dim W <= dimX - codimZ.
  if (report.triggers) {
    report.text = "codim Z >= dim X: intersection components are forced to dimension <= " +
                  std::to_string(report.forced_dim_w) +
                  (report.forced_dim_w == 0 ? " (zero-dimensional)" : "");
  } else {
    report.text = "codim Z < dim X: the codimension inequality does not trigger";
  }
  return report;
}

}  // namespace ckdim
