// Command-line front end: exact dimension series, oracle cross-checks,
// dimension-hypothesis verification, and growth-order decisions.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "ckdim/cache.hpp"
#include "ckdim/closed.hpp"
#include "ckdim/errors.hpp"
#include "ckdim/growth.hpp"
#include "ckdim/oracle.hpp"
#include "ckdim/report.hpp"
#include "ckdim/scenario_file.hpp"
#include "ckdim/verifier.hpp"
#include "ckdim/version.hpp"

namespace {

using namespace ckdim;

constexpr int kExitOk = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitInvalid = 2;

QuotientSpec quotient_from_flags(const std::string& name, long m, long g) {
  if (name == "free") return {QuotientKind::FreeLcs, m};
  if (name == "surface") return {QuotientKind::SurfaceLcs, g};
  if (name == "free-metabelian") return {QuotientKind::FreeMetabelian, m};
  if (name == "surface-metabelian") return {QuotientKind::SurfaceMetabelian, g};
  if (name == "cm") return {QuotientKind::CmTruncation, 0};
  throw std::invalid_argument("unknown quotient \"" + name + "\"");
}

QuadSurd parse_surd(const std::string& text) {
  size_t pos = text.find("sqrt(");
  if (pos == std::string::npos) return QuadSurd(parse_rational(text));
  size_t close = text.find(')', pos);
  if (close == std::string::npos) throw std::invalid_argument("bad surd \"" + text + "\"");
  long d = std::stol(text.substr(pos + 5, close - pos - 5));
  std::string prefix = text.substr(0, pos);
  Rat a = 0, b = 1;
  if (!prefix.empty()) {
    size_t split = prefix.find_last_of("+-");
    if (split == std::string::npos || split == 0) {
      // forms: "-", "2*", "-2*", ""
      std::string bpart = prefix;
      if (!bpart.empty() && bpart.back() == '*') bpart.pop_back();
      if (bpart.empty() || bpart == "+")
        b = 1;
      else if (bpart == "-")
        b = -1;
      else
        b = parse_rational(bpart);
    } else {
      a = parse_rational(prefix.substr(0, split));
      int sign = prefix[split] == '-' ? -1 : 1;
      std::string bpart = prefix.substr(split + 1);
      if (!bpart.empty() && bpart.back() == '*') bpart.pop_back();
      b = bpart.empty() ? Rat(sign) : Rat(sign) * parse_rational(bpart);
    }
  }
  return QuadSurd(a, b, d);
}

// "coeff:polydeg:base" with coeff a rational or +C / -C.
GrowthTerm parse_growth_term(const std::string& text) {
  size_t c1 = text.find(':');
  size_t c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("growth term must be coeff:polydeg:base, got \"" + text + "\"");
  std::string coeff = text.substr(0, c1);
  long polydeg = std::stol(text.substr(c1 + 1, c2 - c1 - 1));
  QuadSurd base = parse_surd(text.substr(c2 + 1));
  GrowthTerm term;
  if (coeff == "+C")
    term.coeff = GrowthCoeff::unknown(+1);
  else if (coeff == "-C")
    term.coeff = GrowthCoeff::unknown(-1);
  else
    term.coeff = GrowthCoeff::exact(parse_rational(coeff));
  term.polydeg = polydeg;
  term.base = base;
  return term;
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%FT%TZ");
  return os.str();
}

void write_output(const std::string& document, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << document;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << document;
  }
}

struct DimsArgs {
  std::string quotient;
  long m = 2, g = 2, N = 1;
  bool use_cache = false;
  std::string cache_dir;
  bool do_verify_cache = false;
  std::string format = "text";
};

int run_dims(const DimsArgs& args) {
  CacheConfig cache = resolve_cache(args.use_cache || args.do_verify_cache, args.cache_dir);
  if (args.do_verify_cache) {
    int mismatches = verify_cache(cache, std::cout);
    std::cout << (mismatches == 0 ? "cache coherent\n" : "cache INCOHERENT\n");
    return mismatches == 0 ? kExitOk : kExitInconclusive;
  }
  QuotientSpec spec = quotient_from_flags(args.quotient, args.m, args.g);
  spec.validate();
  GradedDims dims = cached_graded_series(spec, args.N, cache);
  if (args.format == "machine") {
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool_version"] = kToolVersion;
    doc["quotient"] = spec.canonical();
    doc["provenance"] = is_oracle_backed(spec) ? "oracle" : "closed-form";
    Json values = Json::array();
    for (const Int& v : dims.dims) values.push_back(v.str());
    doc["dims"] = std::move(values);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "graded dimensions for " << spec.canonical() << " ("
              << (is_oracle_backed(spec) ? "oracle" : "closed-form") << ")\n";
    for (long n = 1; n <= dims.max_degree(); ++n)
      std::cout << std::setw(4) << n << "  " << dims.at(n).str() << "\n";
  }
  return kExitOk;
}

int run_oracle_check(const std::string& quotient, long m, long g, long N) {
  QuotientSpec spec = quotient_from_flags(quotient, m, g);
  spec.validate();
  GradedDims formula, oracle;
  switch (spec.kind) {
    case QuotientKind::FreeLcs:
      formula = graded_series(spec, N);
      for (long n = 1; n <= N; ++n)
        oracle.dims.push_back(
            Int(lyndon_words(static_cast<int>(m), static_cast<int>(n)).size()));
      break;
    case QuotientKind::SurfaceLcs:
      formula = graded_series(spec, N);
      oracle = surface_dims_oracle(static_cast<int>(g), N);
      break;
    case QuotientKind::FreeMetabelian:
      formula = graded_series(spec, N);
      oracle = metabelian_dims_oracle(static_cast<int>(m), N);
      break;
    case QuotientKind::CmTruncation:
      formula = graded_series(spec, N);
      oracle = bigraded_truncation_dims_oracle(N);
      break;
    case QuotientKind::SurfaceMetabelian:
      throw std::invalid_argument(
          "oracle-check: surface-metabelian is oracle-only (nothing to compare)");
  }
  bool all_equal = true;
  std::cout << "   n   formula    oracle   status\n";
  for (long n = 1; n <= N; ++n) {
    bool equal = formula.at(n) == oracle.at(n);
    all_equal = all_equal && equal;
    std::cout << std::setw(4) << n << std::setw(10) << formula.at(n).str() << std::setw(10)
              << oracle.at(n).str() << "   " << (equal ? "ok" : "MISMATCH") << "\n";
  }
  std::cout << (all_equal ? "all degrees agree\n" : "disagreement found\n");
  return all_equal ? kExitOk : kExitInconclusive;
}

struct VerifyArgs {
  std::string scenario_path;
  ScenarioDraft flags;  // overrides file values
  std::string smalln_h1_csv, h2_poly_csv;
  std::string format = "text";
  std::string out_path;
  bool stamp = false;
  bool use_cache = false;
  std::string cache_dir;
};

int run_verify(const VerifyArgs& args) {
  ScenarioDraft draft;
  if (!args.scenario_path.empty()) draft = parse_scenario_path(args.scenario_path);
  // flags override file values
  auto merge = [](auto& into, const auto& from) {
    if (from) into = from;
  };
  merge(draft.case_id, args.flags.case_id);
  merge(draft.genus, args.flags.genus);
  merge(draft.punctures, args.flags.punctures);
  merge(draft.s, args.flags.s);
  merge(draft.d, args.flags.d);
  merge(draft.degF, args.flags.degF);
  merge(draft.degFprime, args.flags.degFprime);
  merge(draft.R, args.flags.R);
  merge(draft.n0, args.flags.n0);
  merge(draft.gY, args.flags.gY);
  merge(draft.A, args.flags.A);
  merge(draft.c_h2, args.flags.c_h2);
  merge(draft.c_f0, args.flags.c_f0);
  merge(draft.target, args.flags.target);
  merge(draft.mode, args.flags.mode);
  merge(draft.horizon, args.flags.horizon);
  if (!args.smalln_h1_csv.empty()) {
    std::vector<Int> list;
    std::stringstream ss(args.smalln_h1_csv);
    std::string item;
    while (std::getline(ss, item, ',')) list.emplace_back(item);
    draft.smalln_h1 = std::move(list);
  }
  if (!args.h2_poly_csv.empty()) {
    std::vector<Rat> coeffs;
    std::stringstream ss(args.h2_poly_csv);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
    draft.h2_poly = std::move(coeffs);
  }

  Report report;
  report.scenario = draft.build();
  CacheConfig cache = resolve_cache(args.use_cache, args.cache_dir);
  report.verdict =
      verify_dimension_hypothesis(report.scenario, cache.enabled ? &cache : nullptr);
  if (args.stamp) {
    report.stamped = true;
    report.stamp = iso_timestamp();
  }
  write_output(emit_report(report, args.format == "machine" ? ReportFormat::Machine
                                                            : ReportFormat::Text),
               args.out_path);
  return report.verdict.conclusive() ? kExitOk : kExitInconclusive;
}

int run_growth(const std::vector<std::string>& term_texts, bool decide,
               const std::string& crossover_threshold, long horizon) {
  GrowthSum sum;
  for (const auto& text : term_texts) sum.terms.push_back(parse_growth_term(text));
  sum.normalize();
  if (!crossover_threshold.empty()) {
    CrossoverResult result = crossover(sum, Int(crossover_threshold), horizon);
    if (result.n_min) {
      std::cout << "crossover at n = " << *result.n_min << " (threshold " << crossover_threshold
                << ", horizon " << horizon << ")\n";
      return kExitOk;
    }
    std::cout << "none-within-horizon(" << horizon << ")\n";
    return kExitInconclusive;
  }
  if (decide) {
    DivergesResult result = diverges(sum);
    switch (result.kind) {
      case DivergesResult::Kind::Diverges:
        std::cout << "diverges: dominant " << result.certificate->dominant.str() << "\n";
        for (const auto& step : result.certificate->chain) std::cout << "  " << step << "\n";
        std::cout << "reason: " << result.certificate->reason << "\n";
        return kExitOk;
      case DivergesResult::Kind::InconclusiveBounded:
        std::cout << "inconclusive-bounded: " << result.reason << "\n";
        return kExitInconclusive;
      case DivergesResult::Kind::InconclusiveAmbiguous:
        std::cout << "inconclusive-ambiguous: " << result.reason << "\n";
        return kExitInconclusive;
    }
  }
  for (const auto& term : sum.terms) std::cout << term.str() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dimension-series engine for Selmer codimension bookkeeping"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  DimsArgs dims_args;
  auto* dims_cmd = app.add_subcommand("dims", "print a graded dimension series");
  dims_cmd->add_option("--quotient", dims_args.quotient,
                       "free|surface|free-metabelian|surface-metabelian|cm");
  dims_cmd->add_option("--m", dims_args.m, "generator count for free kinds");
  dims_cmd->add_option("--g", dims_args.g, "genus for surface kinds");
  dims_cmd->add_option("--N", dims_args.N, "max degree");
  dims_cmd->add_flag("--cache", dims_args.use_cache, "use the series cache");
  dims_cmd->add_option("--cache-dir", dims_args.cache_dir, "cache directory (or env CKDIM_CACHE_DIR)");
  dims_cmd->add_flag("--verify-cache", dims_args.do_verify_cache,
                     "recompute and compare every cache entry, then exit");
  dims_cmd->add_option("--format", dims_args.format, "text|machine");

  std::string oc_quotient;
  long oc_m = 2, oc_g = 2, oc_N = 1;
  auto* oc_cmd = app.add_subcommand("oracle-check", "closed form vs brute-force oracle");
  oc_cmd->add_option("--quotient", oc_quotient, "free|surface|free-metabelian|cm")->required();
  oc_cmd->add_option("--m", oc_m, "generator count");
  oc_cmd->add_option("--g", oc_g, "genus");
  oc_cmd->add_option("--N", oc_N, "max degree")->required();

  VerifyArgs verify_args;
  long v_case = 0, v_genus = -1, v_punctures = -1, v_s = 0, v_d = 0, v_degF = 0, v_degFprime = 0,
       v_n0 = 0, v_gY = 0, v_target = 0, v_horizon = 0;
  std::string v_R, v_A, v_ch2, v_cf0, v_mode;
  auto* verify_cmd = app.add_subcommand("verify", "verify the dimension hypothesis");
  verify_cmd->add_option("--scenario", verify_args.scenario_path, "scenario file (flags override)");
  auto* o_case = verify_cmd->add_option("--case", v_case, "situation case 1..4");
  auto* o_genus = verify_cmd->add_option("--genus", v_genus, "case 1 genus");
  auto* o_punct = verify_cmd->add_option("--punctures", v_punctures, "case 1 punctures");
  auto* o_s = verify_cmd->add_option("--s", v_s, "case 2 puncture count (s >= 3)");
  auto* o_d = verify_cmd->add_option("--d", v_d, "dimension of the dominating subvariety");
  auto* o_degF = verify_cmd->add_option("--degF", v_degF, "field degree [F:Q]");
  auto* o_degFp = verify_cmd->add_option("--degFprime", v_degFprime, "case 4 field degree");
  auto* o_R = verify_cmd->add_option("--R", v_R, "case 2 weight-1 cohomology dimension");
  auto* o_n0 = verify_cmd->add_option("--n0", v_n0, "case 3 H^2 vanishing threshold");
  verify_cmd->add_option("--smalln-h1", verify_args.smalln_h1_csv,
                         "case 3 H^1 bounds for degrees 1..n0-1 (comma list)");
  auto* o_gY = verify_cmd->add_option("--gY", v_gY, "case 4 genus of the dominated curve");
  auto* o_A = verify_cmd->add_option("--A", v_A, "case 4 growth constant (rational)");
  auto* o_ch2 = verify_cmd->add_option("--c-h2", v_ch2, "case 4 H^2 constant (rational)");
  auto* o_cf0 = verify_cmd->add_option("--c-f0", v_cf0, "case 4 F^0 constant (rational)");
  verify_cmd->add_option("--h2-poly", verify_args.h2_poly_csv,
                         "case 1 H^2 polynomial coefficients, constant first (comma list)");
  auto* o_target = verify_cmd->add_option("--target", v_target, "target codimension");
  auto* o_mode = verify_cmd->add_option("--mode", v_mode, "crossover|asymptotic");
  auto* o_horizon = verify_cmd->add_option("--horizon", v_horizon, "max level in crossover mode");
  verify_cmd->add_option("--format", verify_args.format, "text|machine");
  verify_cmd->add_option("--out", verify_args.out_path, "write the report to a file");
  verify_cmd->add_flag("--stamp", verify_args.stamp, "include a timestamp in the report");
  verify_cmd->add_flag("--cache", verify_args.use_cache, "use the series cache");
  verify_cmd->add_option("--cache-dir", verify_args.cache_dir, "cache directory");

  long ch_gX = 0, ch_g = 0, ch_d = 0, ch_r = 0, ch_delta = 0, ch_degF = 1;
  auto* chab_cmd = app.add_subcommand("chabauty", "rank-vs-dimension inequality check");
  auto* o_gX = chab_cmd->add_option("--gX", ch_gX, "curve genus (restriction-of-scalars route)");
  chab_cmd->add_option("--degF", ch_degF, "field degree");
  auto* o_chg = chab_cmd->add_option("--g", ch_g, "Albanese dimension (direct route)");
  chab_cmd->add_option("--d", ch_d, "variety dimension (direct route)");
  chab_cmd->add_option("--r", ch_r, "Mordell-Weil rank")->required();
  chab_cmd->add_option("--delta", ch_delta, "Selmer correction");

  long cd_dimX = 0, cd_dimLocal = 0, cd_codimZ = 0;
  auto* codim_cmd = app.add_subcommand("codim", "codimension bookkeeping check");
  codim_cmd->add_option("--dimX", cd_dimX, "dimension of the base variety")->required();
  codim_cmd->add_option("--dimLocal", cd_dimLocal, "dimension of the local moduli")->required();
  codim_cmd->add_option("--codimZ", cd_codimZ, "codimension of the global image")->required();

  std::vector<std::string> growth_terms;
  bool growth_decide = false;
  std::string growth_threshold;
  long growth_horizon = 1000;
  auto* growth_cmd = app.add_subcommand("growth", "evaluate or decide growth sums");
  growth_cmd->add_option("--term", growth_terms, "term coeff:polydeg:base (repeatable)")
      ->required();
  growth_cmd->add_flag("--decide", growth_decide, "divergence decision with certificate");
  growth_cmd->add_option("--crossover", growth_threshold, "threshold for crossover search");
  growth_cmd->add_option("--horizon", growth_horizon, "crossover horizon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (dims_cmd->parsed()) return run_dims(dims_args);
    if (oc_cmd->parsed()) return run_oracle_check(oc_quotient, oc_m, oc_g, oc_N);
    if (verify_cmd->parsed()) {
      auto& f = verify_args.flags;
      if (o_case->count()) f.case_id = v_case;
      if (o_genus->count()) f.genus = v_genus;
      if (o_punct->count()) f.punctures = v_punctures;
      if (o_s->count()) f.s = v_s;
      if (o_d->count()) f.d = v_d;
      if (o_degF->count()) f.degF = v_degF;
      if (o_degFp->count()) f.degFprime = v_degFprime;
      if (o_R->count()) f.R = Int(v_R);
      if (o_n0->count()) f.n0 = v_n0;
      if (o_gY->count()) f.gY = v_gY;
      if (o_A->count()) f.A = parse_rational(v_A);
      if (o_ch2->count()) f.c_h2 = parse_rational(v_ch2);
      if (o_cf0->count()) f.c_f0 = parse_rational(v_cf0);
      if (o_target->count()) f.target = v_target;
      if (o_mode->count()) f.mode = v_mode;
      if (o_horizon->count()) f.horizon = v_horizon;
      return run_verify(verify_args);
    }
    if (chab_cmd->parsed()) {
      ChabautyParams params;
      if (o_gX->count()) {
        params = restriction_params(ch_gX, ch_degF, ch_r, ch_delta);
      } else if (o_chg->count()) {
        params = ChabautyParams{ch_g, ch_d, ch_r, ch_delta};
      } else {
        throw std::invalid_argument("chabauty: give either --gX/--degF or --g/--d");
      }
      ChabautyReport report = chabauty_check(params);
      std::cout << "g=" << params.g << " d=" << params.d << " r=" << params.r
                << " delta=" << params.delta << "\n"
                << (report.holds ? "holds" : "fails") << ", slack " << report.slack << "\n"
                << report.text << "\n";
      return kExitOk;
    }
    if (codim_cmd->parsed()) {
      CodimReport report = unlikely_codim_check(cd_dimX, cd_dimLocal, cd_codimZ);
      std::cout << (report.triggers ? "triggers" : "does not trigger") << "\n"
                << report.text << "\n";
      return kExitOk;
    }
    if (growth_cmd->parsed())
      return run_growth(growth_terms, growth_decide, growth_threshold, growth_horizon);
  } catch (const ScenarioParseError& e) {
    std::cerr << "scenario error at line " << e.line() << ", column " << e.column() << ": "
              << e.what() << "\n";
    return kExitInvalid;
  } catch (const ModeUnavailableError& e) {
    std::cerr << "mode unavailable: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const FeasibilityError& e) {
    std::cerr << "feasibility: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const AmbiguousDominanceError& e) {
    std::cerr << "ambiguous dominance: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
