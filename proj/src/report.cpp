#include "ckdim/report.hpp"

#include <iomanip>
#include <sstream>

#include "ckdim/version.hpp"

namespace ckdim {

namespace {

std::string int_str(const Int& v) { return v.str(); }

std::string rat_str(const Rat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Json rows_to_json(const std::vector<LedgerRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["n"] = row.n;
    r["zx_dim"] = int_str(row.zx_dim);
    r["lo"] = int_str(row.interval.lo);
    r["hi"] = int_str(row.interval.hi);
    r["m_min"] = int_str(row.local_contrib_lower);
    r["h1_upper"] = int_str(row.h1_upper);
    r["codim_contrib"] = int_str(row.codim_contrib_lower);
    out.push_back(std::move(r));
  }
  return out;
}

Json sum_to_json(const GrowthSum& sum) {
  Json out = Json::array();
  for (const auto& term : sum.terms) out.push_back(term.str());
  return out;
}

}  // namespace

Json scenario_to_json(const Scenario& scenario) {
  Json s;
  s["case"] = scenario.case_index();
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Case1>) {
          s["genus"] = c.shape.genus;
          s["punctures"] = c.shape.punctures;
          s["d"] = c.d;
          s["degF"] = c.degF;
          if (c.h2_poly) {
            Json coeffs = Json::array();
            for (const auto& coeff : *c.h2_poly) coeffs.push_back(rat_str(coeff));
            s["h2_poly"] = std::move(coeffs);
          }
        } else if constexpr (std::is_same_v<T, Case2>) {
          s["s"] = c.s;
          s["d"] = c.d;
          s["degF"] = c.degF;
          s["R"] = int_str(c.R);
        } else if constexpr (std::is_same_v<T, Case3>) {
          s["d"] = c.d;
          s["degF"] = c.degF;
          s["n0"] = c.n0;
          if (!c.smalln_default) {
            Json bounds = Json::array();
            for (const auto& bound : c.smalln_h1) bounds.push_back(int_str(bound));
            s["smalln_h1"] = std::move(bounds);
          }
        } else {
          s["gY"] = c.gY;
          s["d"] = c.d;
          s["degFprime"] = c.degFprime;
          if (c.constants) {
            s["A"] = rat_str(c.constants->A);
            s["c_h2"] = rat_str(c.constants->c_h2);
            s["c_f0"] = rat_str(c.constants->c_f0);
          }
        }
      },
      scenario.situation);
  s["target_codim"] = scenario.target_codim;
  s["mode"] = scenario.mode == VerifyMode::Crossover ? "crossover" : "asymptotic";
  s["horizon"] = scenario.horizon;
  return s;
}

Json verdict_to_json(const Verdict& verdict) {
  Json v;
  if (const auto* crossover = std::get_if<CrossoverOutcome>(&verdict.outcome)) {
    v["outcome"] = "crossover";
    v["n_min"] = crossover->n_min;
    v["codim_lower"] = int_str(crossover->codim_value);
    v["f0_upper"] = int_str(crossover->f0_upper);
    v["ledger"] = rows_to_json(crossover->ledger);
  } else if (const auto* divergence = std::get_if<DivergenceOutcome>(&verdict.outcome)) {
    v["outcome"] = "divergence";
    v["growth_sum"] = sum_to_json(divergence->sum);
    Json cert;
    cert["dominant"] = divergence->certificate.dominant.str();
    cert["chain"] = divergence->certificate.chain;
    cert["reason"] = divergence->certificate.reason;
    v["certificate"] = std::move(cert);
  } else {
    const auto& inconclusive = std::get<InconclusiveOutcome>(verdict.outcome);
    v["outcome"] = "inconclusive";
    v["kind"] = inconclusive.kind;
    v["reason"] = inconclusive.reason;
  }
  v["conditionality"] = verdict.conditionality;
  v["notes"] = verdict.notes;
  return v;
}

std::string emit_report_machine(const Report& report) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool"] = kToolName;
  doc["tool_version"] = kToolVersion;
  if (report.stamped) doc["stamp"] = report.stamp;
  doc["scenario"] = scenario_to_json(report.scenario);
  Json provenance;
  QuotientSpec quotient = report.scenario.quotient();
  provenance["z_series"] = is_oracle_backed(quotient) ? "oracle" : "closed-form";
  provenance["quotient"] = quotient.canonical();
  switch (report.scenario.case_index()) {
    case 1:
      provenance["h2_bound"] = "user-supplied polynomial";
      break;
    case 2:
      provenance["R"] = "user-supplied";
      break;
    case 3:
      provenance["small_degree_h1"] = "user-supplied or default-zero-contribution";
      break;
    case 4:
      provenance["growth_constants"] = "user-supplied";
      break;
  }
  doc["provenance"] = std::move(provenance);
  doc["verdict"] = verdict_to_json(report.verdict);
  return doc.dump(2) + "\n";
}

std::string emit_report_text(const Report& report) {
  std::ostringstream os;
  os << kToolName << " " << kToolVersion << " verification report\n";
  if (report.stamped) os << "stamp: " << report.stamp << "\n";
  Json scenario = scenario_to_json(report.scenario);
  os << "scenario:";
  for (auto it = scenario.begin(); it != scenario.end(); ++it)
    os << " " << it.key() << "=" << it.value().dump();
  os << "\n";
  for (const auto& cond : report.verdict.conditionality) os << "assumes: " << cond << "\n";
  for (const auto& note : report.verdict.notes) os << "note: " << note << "\n";
  if (const auto* crossover = std::get_if<CrossoverOutcome>(&report.verdict.outcome)) {
    os << "\n  n     zx     lo     hi     m*    h1^    contrib\n";
    for (const auto& row : crossover->ledger) {
      os << std::setw(3) << row.n << std::setw(7) << row.zx_dim.str() << std::setw(7)
         << row.interval.lo.str() << std::setw(7) << row.interval.hi.str() << std::setw(7)
         << row.local_contrib_lower.str() << std::setw(7) << row.h1_upper.str() << std::setw(10)
         << row.codim_contrib_lower.str() << "\n";
    }
    os << "\nF0 cumulative upper bound: " << crossover->f0_upper.str() << "\n";
    os << "verdict: crossover at minimal level N = " << crossover->n_min
       << " (certified codimension lower bound " << crossover->codim_value.str() << ")\n";
  } else if (const auto* divergence = std::get_if<DivergenceOutcome>(&report.verdict.outcome)) {
    os << "\ngrowth sum:\n";
    for (const auto& term : divergence->sum.terms) os << "  " << term.str() << "\n";
    os << "dominant: " << divergence->certificate.dominant.str() << "\n";
    for (const auto& step : divergence->certificate.chain) os << "  " << step << "\n";
    os << "verdict: divergence certified (" << divergence->certificate.reason << ")\n";
  } else {
    const auto& inconclusive = std::get<InconclusiveOutcome>(report.verdict.outcome);
    os << "verdict: inconclusive [" << inconclusive.kind << "] " << inconclusive.reason << "\n";
  }
  return os.str();
}

std::string emit_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::Machine ? emit_report_machine(report)
                                         : emit_report_text(report);
}

Json parse_report_machine(const std::string& document) {
  Json parsed = Json::parse(document);
  if (!parsed.contains("schema_version") ||
      parsed["schema_version"].get<int>() != kReportSchemaVersion)
    throw std::runtime_error("report: unsupported schema version");
  return parsed;
}

Json report_verdict_block(const Json& parsed) {
  if (!parsed.contains("verdict")) throw std::runtime_error("report: missing verdict block");
  return parsed["verdict"];
}

}  // namespace ckdim
