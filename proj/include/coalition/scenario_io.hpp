#pragma once

#include <string>

#include "coalition/model.hpp"

namespace coalition {

// Lossless JSON round-trip for scenarios. Parsing validates the result, so a
// loaded scenario is always structurally sound.
std::string scenario_to_string(const Scenario& scenario);
Scenario scenario_from_string(const std::string& text);

void save_scenario(const Scenario& scenario, const std::string& path);
Scenario load_scenario(const std::string& path);

}  // namespace coalition
