#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ckdim/cache.hpp"
#include "ckdim/report.hpp"
#include "ckdim/scenario_file.hpp"
#include "ckdim/version.hpp"

using namespace ckdim;

namespace {

Scenario fixture_scenario() {
  Scenario scenario;
  scenario.situation = Case2{3, 1, 1, Int(2)};
  scenario.target_codim = 1;
  return scenario;
}

Report fixture_report() {
  Report report;
  report.scenario = fixture_scenario();
  report.verdict = verify_dimension_hypothesis(report.scenario);
  return report;
}

}  // namespace

TEST_CASE("scenario file grammar") {
  std::istringstream in(
      "# mixed Tate fixture\n"
      "case = 2\n"
      "s = 3\n"
      "d = 1\n"
      "degF = 1\n"
      "R = 2\n"
      "target = 1  # inline comment\n"
      "\n"
      "mode = crossover\n");
  Scenario scenario = parse_scenario_file(in).build();
  CHECK(scenario.case_index() == 2);
  CHECK(std::get<Case2>(scenario.situation).R == 2);
  CHECK(scenario.target_codim == 1);
  CHECK(scenario.horizon == 20);  // default
}

TEST_CASE("scenario file errors carry positions") {
  auto expect_error = [](const std::string& text, long line) {
    std::istringstream in(text);
    try {
      parse_scenario_file(in);
      FAIL("expected ScenarioParseError for: ", text);
    } catch (const ScenarioParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_error("case = 2\nnot a line\n", 2);
  expect_error("case = 2\ncase = 3\n", 2);                 // duplicate key
  expect_error("case = 2\nwhatever = 1\n", 2);             // unknown key
  expect_error("s = many\n", 1);                           // non-integer
  expect_error("mode = sideways\n", 1);                    // bad enum
  expect_error("case =\n", 1);                             // empty value
}

TEST_CASE("scenario draft completeness rules") {
  ScenarioDraft missing_case;
  CHECK_THROWS_AS(missing_case.build(), std::invalid_argument);

  ScenarioDraft no_R;
  no_R.case_id = 2;
  no_R.s = 3;
  CHECK_THROWS_AS(no_R.build(), std::invalid_argument);  // R has no silent default

  ScenarioDraft no_n0;
  no_n0.case_id = 3;
  CHECK_THROWS_AS(no_n0.build(), std::invalid_argument);

  ScenarioDraft partial_constants;
  partial_constants.case_id = 4;
  partial_constants.gY = 2;
  partial_constants.A = Rat(1);
  CHECK_THROWS_AS(partial_constants.build(), std::invalid_argument);

  ScenarioDraft defaults;
  defaults.case_id = 2;
  defaults.s = 3;
  defaults.R = Int(2);
  Scenario scenario = defaults.build();
  CHECK(scenario.d() == 1);
  CHECK(scenario.target_codim == 1);  // target defaults to d
  CHECK(scenario.mode == VerifyMode::Crossover);
}

TEST_CASE("machine reports are byte-identical across invocations") {
  std::string first = emit_report_machine(fixture_report());
  std::string second = emit_report_machine(fixture_report());
  CHECK(first == second);
  CHECK(first.back() == '\n');
}

TEST_CASE("machine report round-trip") {
  Report report = fixture_report();
  std::string document = emit_report_machine(report);
  Json parsed = parse_report_machine(document);
  CHECK(parsed.at("schema_version") == kReportSchemaVersion);
  CHECK(parsed.at("tool") == std::string(kToolName));
  Json verdict = report_verdict_block(parsed);
  CHECK(verdict.at("outcome") == "crossover");
  CHECK(verdict.at("n_min") == 4);
  CHECK(verdict.at("codim_lower") == "2");
  Json rows = verdict.at("ledger");
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].at("n") == 1);
  CHECK(rows[3].at("codim_contrib") == "3");
}

TEST_CASE("stamped reports differ only by the stamp field") {
  Report plain = fixture_report();
  Report stamped = fixture_report();
  stamped.stamped = true;
  stamped.stamp = "2026-01-01T00:00:00Z";
  Json a = parse_report_machine(emit_report_machine(plain));
  Json b = parse_report_machine(emit_report_machine(stamped));
  CHECK_FALSE(a.contains("stamp"));
  CHECK(b.at("stamp") == "2026-01-01T00:00:00Z");
  b.erase("stamp");
  CHECK(a == b);
}

TEST_CASE("schema version is enforced on parse") {
  Report report = fixture_report();
  Json doc = parse_report_machine(emit_report_machine(report));
  doc["schema_version"] = kReportSchemaVersion + 1;
  CHECK_THROWS_AS(parse_report_machine(doc.dump()), std::runtime_error);
}

TEST_CASE("text reports are deterministic too") {
  CHECK(emit_report_text(fixture_report()) == emit_report_text(fixture_report()));
}

TEST_CASE("cache round-trip and coherence") {
  auto dir = std::filesystem::temp_directory_path() / "ckdim_test_cache";
  std::filesystem::remove_all(dir);
  CacheConfig cache = resolve_cache(true, dir.string());

  QuotientSpec spec{QuotientKind::SurfaceLcs, 2};
  GradedDims cold = cached_graded_series(spec, 5, cache);   // miss: compute + write
  GradedDims warm = cached_graded_series(spec, 5, cache);   // hit: read back
  CHECK(cold.dims == warm.dims);
  CHECK(std::filesystem::exists(dir / cache_entry_name(spec, 5)));

  std::ostringstream diag;
  CHECK(verify_cache(cache, diag) == 0);

  // corrupt an entry: verification must flag it
  {
    std::ofstream out(dir / cache_entry_name(spec, 5), std::ios::app);
    out << "";
  }
  {
    std::ofstream out(dir / cache_entry_name(spec, 5));
    out << "ckdim-cache-v1\ntool_version " << kToolVersion << "\nspec " << spec.canonical()
        << "\nN 5\nprovenance closed-form\ndims 4 5 16 45 999\n";
  }
  std::ostringstream diag2;
  CHECK(verify_cache(cache, diag2) == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache-backed verification equals the direct computation") {
  auto dir = std::filesystem::temp_directory_path() / "ckdim_test_cache2";
  std::filesystem::remove_all(dir);
  CacheConfig cache = resolve_cache(true, dir.string());

  std::vector<Scenario> matrix;
  matrix.push_back(fixture_scenario());
  {
    Scenario cm;
    cm.situation = Case3{1, 1, 3, {}, true};
    cm.target_codim = 2;
    matrix.push_back(cm);
  }
  {
    Scenario c1;
    c1.situation = Case1{{2, 0}, 1, 1, std::vector<Rat>{Rat(0)}};
    c1.target_codim = 2;
    c1.horizon = 5;
    matrix.push_back(c1);
  }
  for (const Scenario& scenario : matrix) {
    Report direct, cached;
    direct.scenario = scenario;
    direct.verdict = verify_dimension_hypothesis(scenario);
    cached.scenario = scenario;
    cached.verdict = verify_dimension_hypothesis(scenario, &cache);
    CHECK(emit_report_machine(direct) == emit_report_machine(cached));
    // second pass reads entries back from disk
    Report warm;
    warm.scenario = scenario;
    warm.verdict = verify_dimension_hypothesis(scenario, &cache);
    CHECK(emit_report_machine(direct) == emit_report_machine(warm));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache requires a directory") {
  const char* saved = std::getenv(kCacheEnvVar);
  unsetenv(kCacheEnvVar);
  CHECK_THROWS_AS(resolve_cache(true, ""), std::invalid_argument);
  CHECK_FALSE(resolve_cache(false, "").enabled);
  if (saved) setenv(kCacheEnvVar, saved, 1);
}
