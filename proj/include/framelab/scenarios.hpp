#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "framelab/types.hpp"

namespace framelab::scenarios {

struct Assertion {
  std::string name;
  nlohmann::json measured;
  nlohmann::json expected;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string scenario;
  std::string anchor;
  std::string kind;  // "reproduction" or "extension"
  Index n = 0;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;
  bool all_pass = false;
};

struct Info {
  std::string name;
  std::string anchor;
  std::string kind;
  std::string parameter_range;
  Index default_n = 0;
};

/// Fixed registry, stable order.
const std::vector<Info>& list_scenarios();

/// Runs one scenario at size n (scenario default when omitted). Throws
/// UnknownScenarioError / BadDimensionError on bad input.
Report run_scenario(std::string_view name, std::optional<Index> n = {});

nlohmann::json to_json(const Report& report);

}  // namespace framelab::scenarios
