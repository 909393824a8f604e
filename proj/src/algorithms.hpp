#pragma once

#include <optional>
#include <span>
#include <vector>

#include "divisions.hpp"
#include "measures.hpp"
#include "rational.hpp"

namespace fairdiv {

struct QueryLedger {
    long eval_count = 0;
    long cut_count = 0;
};

// Robertson-Webb query access to one player's measure. Both queries are
// exact; cut returns the leftmost point (ties on zero-density plateaus
// resolve left) or nullopt when [a,1] holds less than v.
class RWOracle {
  public:
    RWOracle(const PiecewiseConstantMeasure& m, QueryLedger& ledger)
        : m_(&m), ledger_(&ledger) {}

    Rational eval(const Rational& a, const Rational& b);
    std::optional<Rational> cut(const Rational& a, const Rational& v);

    const PiecewiseConstantMeasure& measure() const { return *m_; }

  private:
    const PiecewiseConstantMeasure* m_;
    QueryLedger* ledger_;
};

// Two players: player 0 cuts at its half-point, player 1 takes its preferred
// piece (the left one on ties). Envy-free.
ConnectedDivision cut_and_choose(std::span<RWOracle> oracles);

// Banach-Knaster rounds: every remaining player marks its 1/n point from the
// current left edge; the smallest mark wins the piece (lowest player index on
// ties); the last player takes the remainder. Proportional. Cake only, n >= 2.
ConnectedDivision last_diminisher(std::span<RWOracle> oracles);

// Divide and conquer: each player in a group of m marks its ceil(m/2)/m
// fraction point; the group splits at the median mark. Proportional with
// O(n log n) cut queries. Cake only, n >= 1.
ConnectedDivision even_paz(std::span<RWOracle> oracles);

struct EquitableResult {
    ConnectedDivision division;
    Rational common_value;  // every player values its own piece at exactly this
    std::vector<int> order; // piece index -> player, the order that was used
    int iterations = 0;     // affine pieces visited by the exact solver
};

// Connected division where every player's own piece is worth the same v* to
// them, for a fixed left-to-right player order. Cut positions under greedy
// placement are piecewise affine in the target value v, so v* is the exact
// root of (last player's remainder value) - v along those pieces. Where the
// remainder jumps below the diagonal, the jump point is v* and some cut is
// placed inside a run its owner values at zero. Exact arithmetic throughout.
// A pie is opened at 0 and handled as a cake.
EquitableResult equitable_connected(std::span<const PiecewiseConstantMeasure> ms,
                                    const std::vector<int>& order);

// Tries all n! orders (n <= 7) and returns the first, in lexicographic order,
// whose v* is at least 1/n; that result is both equitable and proportional.
EquitableResult equitable_connected_search(std::span<const PiecewiseConstantMeasure> ms);

} // namespace fairdiv
