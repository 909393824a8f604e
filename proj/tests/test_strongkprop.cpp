#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fairness.hpp"
#include "helpers.hpp"
#include "strongkprop.hpp"

using namespace fairdiv;
namespace tt = fairdiv::testing;

namespace {

MeasureList three_pair_measures() {
    auto flat = PiecewiseConstantMeasure::uniform(Geometry::Cake);
    auto low = PiecewiseConstantMeasure::from_segments(
        Geometry::Cake, {{Rational(0), rat("1/2"), Rational(2)}});
    auto high = PiecewiseConstantMeasure::from_segments(
        Geometry::Cake, {{rat("1/2"), Rational(1), Rational(2)}});
    return {flat, low, high, flat, low, high};
}

void check_annihilates(const std::vector<Rational>& lambda, const MeasureList& ms) {
    auto r = common_refinement(ms);
    for (std::size_t c = 0; c < r.cells.size(); ++c) {
        Rational dot;
        for (std::size_t i = 0; i < ms.size(); ++i)
            dot += lambda[i] * r.densities[i][c];
        CHECK(dot == Rational(0));
    }
}

}  // namespace

TEST_CASE("dependency nullspace of the three-pair instance") {
    auto ms = three_pair_measures();
    auto basis = dependency_nullspace(ms);
    // six measures spanning a two-dimensional density space
    CHECK(basis.size() == 4);
    for (const auto& lambda : basis)
        check_annihilates(lambda, ms);

    MeasureList independent{ms[0], ms[1]};
    CHECK(dependency_nullspace(independent).empty());
}

TEST_CASE("random dependency bases annihilate the densities") {
    tt::Rng rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        int n = tt::pick(rng, 2, 6);
        auto ms = tt::random_measures(rng, Geometry::Cake, n, 4);
        for (const auto& lambda : dependency_nullspace(ms))
            check_annihilates(lambda, ms);
    }
}

TEST_CASE("equality classes and strong existence thresholds") {
    auto ms = three_pair_measures();
    auto ec = equality_classes(ms);
    CHECK(ec.max_size == 2);
    REQUIRE(ec.classes.size() == 3);
    CHECK(ec.classes[0] == std::vector<int>{0, 3});
    CHECK(ec.classes[1] == std::vector<int>{1, 4});
    CHECK(ec.classes[2] == std::vector<int>{2, 5});

    CHECK_FALSE(strong_k_exists(ms, 2));
    for (int k = 3; k <= 6; ++k)
        CHECK(strong_k_exists(ms, k));

    MeasureList clones(4, PiecewiseConstantMeasure::uniform(Geometry::Cake));
    for (int k = 2; k <= 4; ++k)
        CHECK_FALSE(strong_k_exists(clones, k));

    CHECK(tt::raised_kind([&] { strong_k_exists(ms, 1); }) == ErrorKind::InvalidArgument);
    CHECK(tt::raised_kind([&] { strong_k_exists(ms, 7); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("perturbation directions for two players") {
    MeasureList ms = {PiecewiseConstantMeasure::from_segments(
                          Geometry::Cake, {{Rational(0), rat("1/10"), Rational(2)},
                                           {rat("1/5"), Rational(1), Rational(1)}}),
                      PiecewiseConstantMeasure::uniform(Geometry::Cake)};
    // D = integral of (f0 - f1)^2 = 1/5, so Q = [[D/4, -D/4], [-D/4, D/4]]
    auto q = proper_matrix(ms).q;
    CHECK(q[0][0] == rat("1/20"));
    CHECK(q[0][1] == rat("-1/20"));
    CHECK(q[1][0] == rat("-1/20"));
    CHECK(q[1][1] == rat("1/20"));
}

TEST_CASE("perturbation directions satisfy all three defining properties") {
    tt::Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        int n = tt::pick(rng, 2, 6);
        auto ms = tt::random_measures(rng, Geometry::Cake, n, 4);
        auto q = proper_matrix(ms).q;

        for (int i = 0; i < n; ++i) {
            Rational sum;
            for (int j = 0; j < n; ++j)
                sum += q[i][j];
            CHECK(sum == Rational(0));
        }
        for (const auto& lambda : dependency_nullspace(ms)) {
            for (int j = 0; j < n; ++j) {
                Rational dot;
                for (int i = 0; i < n; ++i)
                    dot += lambda[i] * q[i][j];
                CHECK(dot == Rational(0));
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                if (measures_equal(ms[i], ms[j]))
                    CHECK(q[i][i] == q[i][j]);
                else
                    CHECK(q[i][i] > q[i][j]);
            }
        }
    }
}

TEST_CASE("the everyone-at-1/n division") {
    tt::Rng rng(57);
    for (int trial = 0; trial < 30; ++trial) {
        int n = tt::pick(rng, 2, 5);
        auto ms = tt::random_measures(rng, Geometry::Cake, n, 4);
        auto d = exact_division(ms);
        CHECK(validate(d).empty());
        auto m = sharing_matrix(d, ms);
        CHECK(is_exact(m).holds);
    }
}

TEST_CASE("sharing-matrix realization round-trips") {
    tt::Rng rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        int n = tt::pick(rng, 2, 5);
        auto ms = tt::random_measures(rng, Geometry::Cake, n, 4);
        auto target = sharing_matrix(tt::random_cake_division(rng, n), ms);
        auto d = realize_sharing_matrix(target, ms);
        CHECK(validate(d).empty());
        CHECK(sharing_matrix(d, ms) == target);
    }
}

TEST_CASE("equal measures force equal rows, so unequal targets are infeasible") {
    MeasureList twins(2, PiecewiseConstantMeasure::uniform(Geometry::Cake));
    auto target = SharingMatrix::from_rows(
        {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK_FALSE(try_realize_sharing_matrix(target, twins).has_value());
    CHECK(tt::raised_kind([&] { realize_sharing_matrix(target, twins); }) ==
          ErrorKind::Infeasible);
}

TEST_CASE("strict division for the three-pair instance at k = 3") {
    auto ms = three_pair_measures();
    auto r = strong_k_division(ms, 3);
    CHECK(r.epsilon == rat("1/7"));
    CHECK(validate(r.division).empty());
    auto m = sharing_matrix(r.division, ms);
    CHECK(is_strong_k_proportional(m, 3).holds);
    std::vector<std::vector<const char*>> expect{
        {"3/14", "1/7", "1/7", "3/14", "1/7", "1/7"},
        {"3/14", "2/7", "0", "3/14", "2/7", "0"},
        {"3/14", "0", "2/7", "3/14", "0", "2/7"}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(m.at(i, j) == rat(expect[i % 3][j]));

    CHECK(tt::raised_kind([&] { strong_k_division(ms, 2); }) == ErrorKind::Precondition);
}

TEST_CASE("strict divisions realize E + eps*Q whenever they exist") {
    tt::Rng rng(61);
    int built = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = tt::pick(rng, 2, 5);
        auto ms = tt::random_measures(rng, Geometry::Cake, n, 4);
        auto q = proper_matrix(ms).q;
        for (int k = 2; k <= n; ++k) {
            if (!strong_k_exists(ms, k))
                continue;
            auto r = strong_k_division(ms, k);
            ++built;
            CHECK(r.epsilon > Rational(0));
            CHECK(validate(r.division).empty());
            auto m = sharing_matrix(r.division, ms);
            CHECK(is_strong_k_proportional(m, k).holds);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(m.at(i, j) == Rational(1, n) + r.epsilon * q[i][j]);
        }
    }
    CHECK(built > 20);
}
