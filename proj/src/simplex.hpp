#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace fairdiv {

// Feasibility system in equality form: find x >= 0 with A x = b.
struct LinearSystem {
    std::vector<std::vector<Rational>> a; // m rows, each of the same width
    std::vector<Rational> b;              // m entries
};

// Exact phase-1 simplex with Bland's rule; terminates on every input.
// Returns a feasible point, or nullopt when none exists.
std::optional<std::vector<Rational>> solve_feasible(const LinearSystem& sys);

} // namespace fairdiv
