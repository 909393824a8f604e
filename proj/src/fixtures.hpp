#pragma once

#include <string>
#include <vector>

#include "scenario.hpp"

namespace fairdiv {

std::vector<std::string> fixture_names();

// Built-in scenarios used by the test suite and the `fixtures` command.
Scenario fixture(const std::string& name);

}  // namespace fairdiv
