#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "divisions.hpp"
#include "errors.hpp"
#include "measures.hpp"
#include "rational.hpp"

namespace fairdiv::testing {

// Runs f and reports which error kind it raised, if any.
template <typename F>
std::optional<ErrorKind> raised_kind(F&& f) {
    try {
        f();
        return std::nullopt;
    } catch (const Error& e) {
        return e.kind();
    }
}

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A row of n nonnegative rationals summing to 1: differences of n-1 sorted
// marks on a random integer grid.
inline std::vector<Rational> random_simplex_row(Rng& rng, int n, int max_den = 24) {
    int den = pick(rng, n, max_den);
    std::vector<int> marks{0, den};
    for (int i = 0; i < n - 1; ++i)
        marks.push_back(pick(rng, 0, den));
    std::sort(marks.begin(), marks.end());
    std::vector<Rational> row;
    for (int i = 0; i < n; ++i)
        row.push_back(Rational(marks[i + 1] - marks[i], den));
    return row;
}

// Each row's largest entry lands on the diagonal with probability 1/2, so
// fair and unfair matrices both show up often.
inline SharingMatrix random_sharing_matrix(Rng& rng, int n) {
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < n; ++i) {
        auto row = random_simplex_row(rng, n);
        if (pick(rng, 0, 1)) {
            auto mx = std::max_element(row.begin(), row.end()) - row.begin();
            std::swap(row[i], row[mx]);
        }
        rows.push_back(std::move(row));
    }
    return SharingMatrix::from_rows(std::move(rows));
}

// Random piecewise-constant probability measure with at most max_cells cells
// of positive density; zero-density cells may appear as well.
inline PiecewiseConstantMeasure random_measure(Rng& rng, Geometry g, int max_cells) {
    int target = pick(rng, 1, max_cells);
    int den = pick(rng, target + 1, 4 * target + 4);
    std::set<int> marks{0, den};
    while (static_cast<int>(marks.size()) < target + 1)
        marks.insert(pick(rng, 1, den - 1));
    std::vector<int> bp(marks.begin(), marks.end());
    int cells = static_cast<int>(bp.size()) - 1;
    std::vector<int> w(cells);
    int positive = 0;
    for (int c = 0; c < cells; ++c) {
        w[c] = pick(rng, 0, 4);
        positive += w[c] != 0;
    }
    if (!positive)
        w[pick(rng, 0, cells - 1)] = 1;
    Rational total;
    for (int c = 0; c < cells; ++c)
        total += Rational(w[c]) * Rational(bp[c + 1] - bp[c], den);
    std::vector<Rational> breakpoints, values;
    for (int c = 0; c <= cells; ++c)
        breakpoints.push_back(Rational(bp[c], den));
    for (int c = 0; c < cells; ++c)
        values.push_back(Rational(w[c]) / total);
    return PiecewiseConstantMeasure::from_cells(g, std::move(breakpoints), std::move(values));
}

// n measures where each one after the first repeats an earlier one with
// probability 1/3, so equal-measure pairs are common.
inline MeasureList random_measures(Rng& rng, Geometry g, int n, int max_cells) {
    MeasureList ms;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && pick(rng, 0, 2) == 0)
            ms.push_back(ms[pick(rng, 0, i - 1)]);
        else
            ms.push_back(random_measure(rng, g, max_cells));
    }
    return ms;
}

inline ConnectedDivision random_cake_division(Rng& rng, int n) {
    int den = pick(rng, n, 3 * n);
    std::vector<int> marks;
    for (int i = 0; i < n - 1; ++i)
        marks.push_back(pick(rng, 0, den));
    std::sort(marks.begin(), marks.end());
    std::vector<Rational> cuts;
    for (int x : marks)
        cuts.push_back(Rational(x, den));
    std::vector<int> asg(n);
    std::iota(asg.begin(), asg.end(), 0);
    std::shuffle(asg.begin(), asg.end(), rng);
    return ConnectedDivision::cake(std::move(cuts), std::move(asg));
}

}  // namespace fairdiv::testing
