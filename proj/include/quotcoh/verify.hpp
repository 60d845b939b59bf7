#pragma once

// Named verification suites over bounded input grids. Each case records its
// inputs, the expected value, the computed value and whether they agree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace quotcoh {

struct VerifyOptions {
  std::vector<int> genera;  // empty: suite default
  std::optional<int> n;
  std::optional<int> rank;
  std::optional<int> max_co;
  std::optional<int> max_degree;
  std::optional<int> max_t;
  std::uint64_t seed = 0;
  int random_cases = 200;
};

struct CaseResult {
  nlohmann::json inputs;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  std::size_t passed() const;
  bool ok() const { return passed() == cases.size(); }
  const CaseResult* first_failure() const;
  /// {suite, cases: [{inputs, expected, got, pass}], summary}
  nlohmann::json to_json() const;
  /// Summary line plus the first counterexample, if any.
  std::string to_text() const;
};

/// recursion, pullback, localization, series, ranks, diagonal, generators, structure.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all" (cases then carry a "suite" input).
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace quotcoh
