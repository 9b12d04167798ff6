#pragma once

#include <string>

#include "json.hpp"

#include "ckdim/verifier.hpp"

namespace ckdim {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Machine, Text };

struct Report {
  Scenario scenario;
  Verdict verdict;
  bool stamped = false;      // timestamps are opt-in to keep output deterministic
  std::string stamp;
};

Json scenario_to_json(const Scenario& scenario);
Json verdict_to_json(const Verdict& verdict);

// Stable, schema-versioned machine document (trailing newline included).
std::string emit_report_machine(const Report& report);
std::string emit_report_text(const Report& report);
std::string emit_report(const Report& report, ReportFormat format);

// Round-trip support: the verdict block of a parsed machine report.
Json parse_report_machine(const std::string& document);
Json report_verdict_block(const Json& parsed);

}  // namespace ckdim
