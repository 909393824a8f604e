#include "fixtures.hpp"

#include "errors.hpp"
#include "impossibility.hpp"

namespace fairdiv {

namespace {

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        names.push_back("p" + std::to_string(i));
    return names;
}

PiecewiseConstantMeasure third_block(long which) {
    // Density 3 on [which/3, (which+1)/3], zero elsewhere.
    return PiecewiseConstantMeasure::from_segments(
        Geometry::Cake, {{Rational(which, 3), Rational(which + 1, 3), Rational(3)}});
}

// Four players whose sharing matrix under the "witness" division has diagonal
// (1/3, 1/3, 1/3, 2/3): proportional at k = 4 and k = 3 but not at k = 2.
Scenario four_player_matrix() {
    Scenario s;
    s.geometry = Geometry::Cake;
    s.player_names = default_names(4);
    s.measures.push_back(third_block(2));
    s.measures.push_back(third_block(0));
    s.measures.push_back(third_block(1));
    s.measures.push_back(third_block(2));
    auto iv = [](long a, long b) {
        return Interval::make(Geometry::Cake, Rational(a, 9), Rational(b, 9));
    };
    GeneralDivision witness = GeneralDivision::make(
        Geometry::Cake, {{iv(6, 7)}, {iv(0, 1)}, {iv(3, 4)}, {iv(1, 3), iv(4, 6), iv(7, 9)}});
    s.divisions.emplace_back("witness", AnyDivision(std::move(witness)));
    return s;
}

// Six players in three equal-measure pairs, so the largest equality class has
// size 2 and strong k-proportional divisions exist exactly for k >= 3.
Scenario six_player() {
    Scenario s;
    s.geometry = Geometry::Cake;
    s.player_names = default_names(6);
    auto lower = PiecewiseConstantMeasure::from_segments(
        Geometry::Cake, {{Rational(0), Rational(1, 2), Rational(2)}});
    auto upper = PiecewiseConstantMeasure::from_segments(
        Geometry::Cake, {{Rational(1, 2), Rational(1), Rational(2)}});
    auto flat = PiecewiseConstantMeasure::uniform(Geometry::Cake);
    s.measures = {flat, lower, upper, flat, lower, upper};
    return s;
}

Scenario pie_equitable() {
    Scenario s;
    s.geometry = Geometry::Pie;
    s.player_names = default_names(5);
    s.measures = pie_counterexample(5);
    return s;
}

Scenario cake_pareto() {
    Scenario s;
    s.geometry = Geometry::Cake;
    s.player_names = default_names(5);
    s.measures = cake_counterexample(5);
    s.divisions.emplace_back("dominating", AnyDivision(dominating_division(5)));
    return s;
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"four-player-matrix", "six-player", "pie-equitable", "cake-pareto"};
}

Scenario fixture(const std::string& name) {
    if (name == "four-player-matrix")
        return four_player_matrix();
    if (name == "six-player")
        return six_player();
    if (name == "pie-equitable")
        return pie_equitable();
    if (name == "cake-pareto")
        return cake_pareto();
    raise(ErrorKind::InvalidArgument, "unknown fixture \"" + name + "\"");
}

}  // namespace fairdiv
