#pragma once

#include <string>

#include "specshare/scenario.hpp"

namespace specshare {

// Parses a scenario JSON document. Unknown keys are rejected; `seed` is
// mandatory. ConfigError on any problem.
Scenario load_scenario_json(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

}  // namespace specshare
