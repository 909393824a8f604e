#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divisions.hpp"
#include "measures.hpp"

namespace fairdiv {

// Outcome of a certified grid search.  The search itself runs in floating
// point; every value reported here that carries a verdict (exact_violation,
// the structure/domination counters) was recomputed in exact rational
// arithmetic at the candidate points.
struct SearchCertificate {
    std::string theorem;      // "pie-equitable-kprop" or "cake-pareto"
    int n = 0;
    int k = 0;                // proportionality level tested
    Rational grid_step;       // h
    int refine_rounds = 0;
    double best_violation = 0.0;        // V* from the float search
    Rational exact_violation;           // V at the best candidate, exact
    std::optional<ConnectedDivision> best_division;
    // Assignment classes evaluated per cut vector after merging players with
    // identical measures; divisions_examined counts the full space these
    // classes stand for.
    long assignment_classes = 0;
    long long divisions_examined = 0;
    // Pie: near-feasible candidates (V < 0.05) where no player holding the
    // uniform measure avoids one of the two special arcs.  The counting
    // argument says this cannot happen, so anything nonzero is a red flag.
    long structure_violations = 0;
    long near_feasible_seen = 0;
    // Cake: grid divisions passing the exact (n-1)-proportionality check,
    // and how many of those failed the diagonal or domination assertions.
    long long kprop_divisions_found = 0;
    long diagonal_failures = 0;
    long domination_failures = 0;
    bool bar_met = false;     // pie: exact V* > 1e-6; cake: found >= 1, failures == 0
    double wall_seconds = 0.0;
};

// Measures on the circle for which no division into connected arcs is both
// (n-1)-proportional and equitable.  Requires n >= 5; the argument breaks
// below that and the constructor says so.
MeasureList pie_counterexample(int n);

// Measures on [0,1] whose (n-1)-proportional connected divisions all share
// the diagonal (1/n, ..., 1/n) and are dominated.  Requires n >= 2.
MeasureList cake_counterexample(int n);

// The dominating division: player 0 takes [0, 1/2n], the rest of the cake is
// split evenly among the others in order.
ConnectedDivision dominating_division(int n);

// Violation score of a circle division with sorted cuts in [0,1):
//   V = max(0, -slack_k(M)) + (max_i M[i][i] - min_i M[i][i])
// slack_k is the worst k-proportionality slack over players.  V = 0 exactly
// when the division is k-proportional and equitable.  The double overload is
// the search kernel; the exact overload is the verdict.
double violation_score_pie(const std::vector<double>& cuts,
                           const std::vector<int>& assignment,
                           std::span<const PiecewiseConstantMeasure> ms, int k);
Rational violation_score_pie_exact(const ConnectedDivision& d,
                                   std::span<const PiecewiseConstantMeasure> ms,
                                   int k);

struct PieSearchOptions {
    int n = 5;
    int grid = 60;        // cuts range over multiples of 1/grid
    int refine_rounds = 3;
    int k = 0;            // 0 means n-1
    int threads = 1;
};

// Sweeps all sorted cut multisets on the grid against all assignment classes,
// refines the best candidate of each class by coordinate descent with steps
// h/2, h/4, ..., and returns the certificate.  Deterministic for any thread
// count: per-first-cut results are merged in index order with lexicographic
// tie-breaking on the cut vector.
SearchCertificate certify_pie_impossibility(const PieSearchOptions& opt);

struct CakeSearchOptions {
    int n = 5;
    int grid = 40;        // interior cuts range over multiples of 1/grid
    int threads = 1;
};

// Enumerates every connected division of the cake with cuts on the grid,
// keeps the ones that are exactly (n-1)-proportional, and checks each against
// the forced diagonal (tolerance h * max density) and exact domination by
// dominating_division(n).  Requires n >= 3.
SearchCertificate certify_cake_pareto(const CakeSearchOptions& opt);

}  // namespace fairdiv
