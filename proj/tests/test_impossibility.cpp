#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fairness.hpp"
#include "helpers.hpp"
#include "impossibility.hpp"

using namespace fairdiv;
namespace tt = fairdiv::testing;

namespace {

void check_same_outcome(const SearchCertificate& a, const SearchCertificate& b) {
    CHECK(a.theorem == b.theorem);
    CHECK(a.n == b.n);
    CHECK(a.k == b.k);
    CHECK(a.grid_step == b.grid_step);
    CHECK(a.best_violation == b.best_violation);
    CHECK(a.exact_violation == b.exact_violation);
    CHECK(a.assignment_classes == b.assignment_classes);
    CHECK(a.divisions_examined == b.divisions_examined);
    CHECK(a.structure_violations == b.structure_violations);
    CHECK(a.near_feasible_seen == b.near_feasible_seen);
    CHECK(a.kprop_divisions_found == b.kprop_divisions_found);
    CHECK(a.diagonal_failures == b.diagonal_failures);
    CHECK(a.domination_failures == b.domination_failures);
    CHECK(a.bar_met == b.bar_met);
    REQUIRE(a.best_division.has_value() == b.best_division.has_value());
    if (a.best_division) {
        CHECK(a.best_division->cuts() == b.best_division->cuts());
        CHECK(a.best_division->assignment() == b.best_division->assignment());
    }
}

}  // namespace

TEST_CASE("the two dented circle densities") {
    auto ms = pie_counterexample(5);
    REQUIRE(ms.size() == 5);
    CHECK(ms[0].integral(Rational(0), rat("1/6")) == Rational(0));
    CHECK(ms[0].integral(rat("1/6"), rat("1/2")) == rat("2/5"));
    CHECK(ms[1].integral(rat("1/2"), rat("2/3")) == Rational(0));
    CHECK(ms[1].integral(Rational(0), rat("1/2")) == rat("3/5"));
    for (int i = 2; i < 5; ++i)
        CHECK(measures_equal(ms[i], PiecewiseConstantMeasure::uniform(Geometry::Pie)));
    CHECK(tt::raised_kind([] { pie_counterexample(4); }) == ErrorKind::Precondition);
}

TEST_CASE("the pinched cake density") {
    auto ms = cake_counterexample(5);
    REQUIRE(ms.size() == 5);
    CHECK(ms[0].integral(Rational(0), rat("1/10")) == rat("1/5"));
    CHECK(ms[0].integral(rat("1/10"), rat("1/5")) == Rational(0));
    CHECK(ms[0].integral(rat("1/5"), Rational(1)) == rat("4/5"));
    for (int i = 1; i < 5; ++i)
        CHECK(measures_equal(ms[i], PiecewiseConstantMeasure::uniform(Geometry::Cake)));
    CHECK(tt::raised_kind([] { cake_counterexample(1); }) == ErrorKind::Precondition);
}

TEST_CASE("the dominating division is not (n-1)-proportional itself") {
    auto ms = cake_counterexample(5);
    auto d = dominating_division(5);
    CHECK(validate(d).empty());
    auto m = sharing_matrix(d, ms);
    CHECK(m.at(0, 0) == rat("1/5"));
    for (int i = 1; i < 5; ++i)
        CHECK(m.at(i, i) == rat("9/40"));
    CHECK_FALSE(is_k_proportional(m, 4).holds);
    CHECK(is_proportional(m).holds);
    CHECK_FALSE(is_equitable(m).holds);
    // row 0: the first player sees 1/5, 1/8, then 9/40 on the last three pieces
    CHECK(m.at(0, 1) == rat("1/8"));
    CHECK(m.at(0, 2) == rat("9/40"));
}

TEST_CASE("float and exact violation scores agree to 1e-12") {
    auto ms = pie_counterexample(5);
    tt::Rng rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const long den = 360;
        std::vector<long> marks;
        for (int i = 0; i < 5; ++i)
            marks.push_back(tt::pick(rng, 0, den - 1));
        std::sort(marks.begin(), marks.end());
        std::vector<Rational> cuts;
        std::vector<double> dcuts;
        for (long x : marks) {
            cuts.push_back(Rational(x, den));
            dcuts.push_back(static_cast<double>(x) / den);
        }
        std::vector<int> asg{0, 1, 2, 3, 4};
        std::shuffle(asg.begin(), asg.end(), rng);
        auto d = ConnectedDivision::pie(cuts, asg);
        for (int k : {2, 4, 5}) {
            double approx = violation_score_pie(dcuts, asg, ms, k);
            double exact = violation_score_pie_exact(d, ms, k).to_double();
            CHECK(std::abs(approx - exact) <= 1e-12);
            CHECK(exact >= 0.0);
        }
    }
}

TEST_CASE("coarse circle sweep already separates equitable from 4-proportional") {
    PieSearchOptions opt;
    opt.n = 5;
    opt.grid = 12;
    opt.refine_rounds = 0;
    opt.threads = 2;
    auto c = certify_pie_impossibility(opt);
    CHECK(c.theorem == "pie-equitable-kprop");
    CHECK(c.k == 4);
    CHECK(c.grid_step == rat("1/12"));
    CHECK(c.assignment_classes == 20);
    CHECK(c.divisions_examined == 87360);
    CHECK(c.exact_violation == rat("4/45"));
    CHECK(c.near_feasible_seen == 0);
    CHECK(c.structure_violations == 0);
    CHECK(c.bar_met);
    REQUIRE(c.best_division.has_value());
    CHECK(c.best_division->cuts() ==
          std::vector<Rational>{rat("1/12"), rat("1/4"), rat("5/12"), rat("3/4"), rat("11/12")});
    CHECK(c.best_division->assignment() == std::vector<int>{2, 3, 1, 0, 4});
}

TEST_CASE("the refined sweep is deterministic across thread counts") {
    PieSearchOptions opt;
    opt.n = 5;
    opt.grid = 36;
    opt.refine_rounds = 1;
    opt.threads = 1;
    auto one = certify_pie_impossibility(opt);
    opt.threads = 2;
    auto two = certify_pie_impossibility(opt);
    check_same_outcome(one, two);

    CHECK(one.exact_violation == rat("13/270"));
    CHECK(one.divisions_examined == 13160354);
    CHECK(one.near_feasible_seen == 130);
    CHECK(one.structure_violations == 0);
    CHECK(one.bar_met);
    REQUIRE(one.best_division.has_value());
    CHECK(one.best_division->cuts() ==
          std::vector<Rational>{rat("1/9"), rat("11/36"), rat("1/2"), rat("13/18"), rat("11/12")});
    CHECK(one.best_division->assignment() == std::vector<int>{1, 2, 3, 0, 4});
}

TEST_CASE("asking for full proportionality instead finds a feasible division") {
    PieSearchOptions opt;
    opt.n = 5;
    opt.grid = 30;
    opt.refine_rounds = 0;
    opt.k = 5;
    opt.threads = 2;
    auto c = certify_pie_impossibility(opt);
    CHECK(c.exact_violation == Rational(0));
    CHECK_FALSE(c.bar_met);
    CHECK(c.best_violation <= 1e-6);
}

TEST_CASE("cake sweep finds exactly the equal-fifths divisions and dominates them") {
    CakeSearchOptions opt;
    opt.n = 5;
    opt.grid = 20;
    opt.threads = 1;
    auto one = certify_cake_pareto(opt);
    opt.threads = 3;
    auto three = certify_cake_pareto(opt);
    check_same_outcome(one, three);

    CHECK(one.theorem == "cake-pareto");
    CHECK(one.assignment_classes == 5);
    CHECK(one.divisions_examined == 1275120);
    CHECK(one.kprop_divisions_found == 120);
    CHECK(one.diagonal_failures == 0);
    CHECK(one.domination_failures == 0);
    CHECK(one.bar_met);
    REQUIRE(one.best_division.has_value());
    CHECK(one.best_division->cuts() ==
          std::vector<Rational>{rat("1/5"), rat("2/5"), rat("3/5"), rat("4/5")});
}

TEST_CASE("search options are validated") {
    CHECK(tt::raised_kind([] {
              PieSearchOptions o;
              o.grid = 35;
              certify_pie_impossibility(o);
          }) == ErrorKind::Validation);
    CHECK(tt::raised_kind([] {
              PieSearchOptions o;
              o.refine_rounds = -1;
              certify_pie_impossibility(o);
          }) == ErrorKind::Validation);
    CHECK(tt::raised_kind([] {
              PieSearchOptions o;
              o.n = 4;
              certify_pie_impossibility(o);
          }) == ErrorKind::Precondition);
    CHECK(tt::raised_kind([] {
              CakeSearchOptions o;
              o.grid = 25;
              certify_cake_pareto(o);
          }) == ErrorKind::Validation);
    CHECK(tt::raised_kind([] {
              CakeSearchOptions o;
              o.n = 2;
              certify_cake_pareto(o);
          }) == ErrorKind::Precondition);
}
