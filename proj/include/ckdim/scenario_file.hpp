#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ckdim/scenario.hpp"

namespace ckdim {

// Scenario parse failure with position information.
class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(const std::string& message, long line, long column)
      : std::runtime_error(message), line_(line), column_(column) {}
  long line() const { return line_; }
  long column() const { return column_; }

 private:
  long line_;
  long column_;
};

// Partially specified scenario. A flat key-value file fills it first;
// command-line flags overwrite individual fields afterwards.
struct ScenarioDraft {
  std::optional<long> case_id;
  std::optional<long> genus, punctures, s;
  std::optional<long> d, degF, degFprime;
  std::optional<Int> R;
  std::optional<long> n0;
  std::optional<std::vector<Int>> smalln_h1;
  std::optional<long> gY;
  std::optional<Rat> A, c_h2, c_f0;
  std::optional<std::vector<Rat>> h2_poly;
  std::optional<long> target;
  std::optional<std::string> mode;
  std::optional<long> horizon;

  // Validates completeness and cross-field constraints.
  Scenario build() const;
};

// Flat "key = value" grammar; '#' comments; unknown keys are errors.
ScenarioDraft parse_scenario_file(std::istream& in);
ScenarioDraft parse_scenario_path(const std::string& path);

Rat parse_rational(const std::string& text);  // "3", "-7/2"

}  // namespace ckdim
