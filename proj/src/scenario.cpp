#include "scenario.hpp"

namespace fairdiv {

Geometry division_geometry(const AnyDivision& d) {
    return std::visit([](const auto& x) { return x.geometry(); }, d);
}

int division_players(const AnyDivision& d) {
    return std::visit([](const auto& x) { return x.players(); }, d);
}

SharingMatrix sharing_matrix(const AnyDivision& d, std::span<const PiecewiseConstantMeasure> ms) {
    return std::visit([&](const auto& x) { return sharing_matrix(x, ms); }, d);
}

const AnyDivision* Scenario::division(const std::string& name) const {
    for (const auto& [n, d] : divisions)
        if (n == name)
            return &d;
    return nullptr;
}

}  // namespace fairdiv
