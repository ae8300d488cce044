#pragma once

#include <string>

#include "dcsim/io/ini.hpp"
#include "dcsim/scenario/scenario.hpp"

namespace dcsim {

/// Parses and validates scenario text. Unknown sections or keys are rejected,
/// all defaults are resolved, and cross-field invariants are enforced.
/// Non-fatal notes (e.g. observer/controller bandwidth ratio outside the
/// recommended range) land in Scenario::warnings.
Scenario parse_scenario_text(const std::string& text, const std::string& origin = "<string>");

/// Parses a scenario file; the scenario name defaults to the file stem.
Scenario parse_scenario_file(const std::string& path);

}  // namespace dcsim
