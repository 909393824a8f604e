#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "divisions.hpp"
#include "measures.hpp"

namespace fairdiv {

using AnyDivision = std::variant<ConnectedDivision, GeneralDivision>;

Geometry division_geometry(const AnyDivision& d);
int division_players(const AnyDivision& d);
SharingMatrix sharing_matrix(const AnyDivision& d, std::span<const PiecewiseConstantMeasure> ms);

// A problem instance: one measure per named player, all over the same ground
// set, plus optional named divisions to check against them.
struct Scenario {
    Geometry geometry = Geometry::Cake;
    std::vector<std::string> player_names;
    MeasureList measures;
    std::vector<std::pair<std::string, AnyDivision>> divisions;

    int players() const { return static_cast<int>(measures.size()); }
    const AnyDivision* division(const std::string& name) const;
};

}  // namespace fairdiv
