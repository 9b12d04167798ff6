#include "ckdim/scenario_file.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace ckdim {

namespace {

std::string trim(const std::string& s) {
  size_t first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  size_t last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

long parse_long(const std::string& text, long line) {
  try {
    size_t used = 0;
    long value = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw ScenarioParseError("integer expected, got \"" + text + "\"", line, 0);
  }
}

Int parse_bigint(const std::string& text, long line) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw ScenarioParseError("integer expected, got \"" + text + "\"", line, 0);
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  if (out.empty()) out.push_back("");
  return out;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  if (slash == std::string::npos) return Rat(Int(text));
  Int num(text.substr(0, slash));
  Int den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
  return Rat(num, den);
}

ScenarioDraft parse_scenario_file(std::istream& in) {
  ScenarioDraft draft;
  std::set<std::string> seen;
  std::string raw;
  long lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ScenarioParseError("expected \"key = value\"", lineno, 1);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ScenarioParseError("empty key", lineno, 1);
    if (value.empty())
      throw ScenarioParseError("empty value for key \"" + key + "\"", lineno,
                               static_cast<long>(eq + 2));
    if (!seen.insert(key).second)
      throw ScenarioParseError("duplicate key \"" + key + "\"", lineno, 1);

    auto rational = [&](const std::string& v) {
      try {
        return parse_rational(v);
      } catch (const std::exception&) {
        throw ScenarioParseError("rational expected, got \"" + v + "\"", lineno, 0);
      }
    };

    if (key == "case")
      draft.case_id = parse_long(value, lineno);
    else if (key == "genus")
      draft.genus = parse_long(value, lineno);
    else if (key == "punctures")
      draft.punctures = parse_long(value, lineno);
    else if (key == "s")
      draft.s = parse_long(value, lineno);
    else if (key == "d")
      draft.d = parse_long(value, lineno);
    else if (key == "degF")
      draft.degF = parse_long(value, lineno);
    else if (key == "degFprime")
      draft.degFprime = parse_long(value, lineno);
    else if (key == "R")
      draft.R = parse_bigint(value, lineno);
    else if (key == "n0")
      draft.n0 = parse_long(value, lineno);
    else if (key == "smalln_h1") {
      std::vector<Int> list;
      for (const auto& item : split_commas(value)) list.push_back(parse_bigint(item, lineno));
      draft.smalln_h1 = std::move(list);
    } else if (key == "gY")
      draft.gY = parse_long(value, lineno);
    else if (key == "A")
      draft.A = rational(value);
    else if (key == "c_h2")
      draft.c_h2 = rational(value);
    else if (key == "c_f0")
      draft.c_f0 = rational(value);
    else if (key == "h2_poly") {
      std::vector<Rat> coeffs;
      for (const auto& item : split_commas(value)) coeffs.push_back(rational(item));
      draft.h2_poly = std::move(coeffs);
    } else if (key == "target")
      draft.target = parse_long(value, lineno);
    else if (key == "mode") {
      if (value != "crossover" && value != "asymptotic")
        throw ScenarioParseError("mode must be crossover or asymptotic", lineno, 0);
      draft.mode = value;
    } else if (key == "horizon")
      draft.horizon = parse_long(value, lineno);
    else
      throw ScenarioParseError("unknown key \"" + key + "\"", lineno, 1);
  }
  return draft;
}

ScenarioDraft parse_scenario_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  return parse_scenario_file(in);
}

Scenario ScenarioDraft::build() const {
  if (!case_id) throw std::invalid_argument("scenario: \"case\" is required");
  Scenario scenario;
  const long dd = d.value_or(1);
  switch (*case_id) {
    case 1: {
      Case1 c;
      c.shape.genus = genus.value_or(0);
      c.shape.punctures = punctures.value_or(0);
      if (!genus && !punctures)
        throw std::invalid_argument("scenario case 1: genus/punctures required");
      c.d = dd;
      c.degF = degF.value_or(1);
      c.h2_poly = h2_poly;
      scenario.situation = std::move(c);
      break;
    }
    case 2: {
      Case2 c;
      if (!s) throw std::invalid_argument("scenario case 2: s required");
      if (!R) throw std::invalid_argument("scenario case 2: R required (no silent default)");
      c.s = *s;
      c.d = dd;
      c.degF = degF.value_or(1);
      c.R = *R;
      scenario.situation = std::move(c);
      break;
    }
    case 3: {
      Case3 c;
      c.d = dd;
      c.degF = degF.value_or(1);
      if (!n0) throw std::invalid_argument("scenario case 3: n0 required (no effective default)");
      c.n0 = *n0;
      if (smalln_h1) {
        c.smalln_h1 = *smalln_h1;
        c.smalln_default = false;
      }
      scenario.situation = std::move(c);
      break;
    }
    case 4: {
      Case4 c;
      if (!gY) throw std::invalid_argument("scenario case 4: gY required");
      c.gY = *gY;
      c.d = dd;
      c.degFprime = degFprime.value_or(degF.value_or(1));
      if (A || c_h2 || c_f0) {
        if (!(A && c_h2 && c_f0))
          throw std::invalid_argument("scenario case 4: A, c_h2, c_f0 must be supplied together");
        c.constants = Case4::Constants{*A, *c_h2, *c_f0};
      }
      scenario.situation = std::move(c);
      break;
    }
    default:
      throw std::invalid_argument("scenario: case must be 1..4");
  }
  scenario.target_codim = target.value_or(dd);  // defaults to d = dim V'
  scenario.mode =
      mode.value_or("crossover") == "asymptotic" ? VerifyMode::Asymptotic : VerifyMode::Crossover;
  scenario.horizon = horizon.value_or(20);
  scenario.validate();
  return scenario;
}

}  // namespace ckdim
