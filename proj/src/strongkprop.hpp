#pragma once

#include <optional>
#include <span>
#include <vector>

#include "divisions.hpp"
#include "measures.hpp"
#include "rational.hpp"

namespace fairdiv {

// Basis of the dependency space {lambda : sum_i lambda_i * f_i = 0 a.e.},
// computed by exact elimination on the density values over the common
// refinement. Empty when the measures are linearly independent.
std::vector<std::vector<Rational>> dependency_nullspace(
    std::span<const PiecewiseConstantMeasure> ms);

// Partition of player indices into classes of pairwise-equal measures.
// Classes are ordered by smallest member, members ascending.
struct EqualityClasses {
    std::vector<std::vector<int>> classes;
    int max_size = 0;
};

EqualityClasses equality_classes(std::span<const PiecewiseConstantMeasure> ms);

// A strong k-proportional division exists iff every k of the measures include
// two different ones, i.e. iff no equality class has size >= k. 2 <= k <= n.
bool strong_k_exists(std::span<const PiecewiseConstantMeasure> ms, int k);

// Perturbation directions: every row sums to 0, columns respect every
// dependency among the measures, and Q[i][i] >= Q[i][j] with equality exactly
// when measures i and j coincide.
struct ProperMatrix {
    std::vector<std::vector<Rational>> q;
};

// Q[i][j] = c_i - D[i][j]/2 where D[i][j] = integral of (f_i - f_j)^2 and
// c_i averages the D[i][j]/2 over j. All three properties above are
// re-verified on the result; a failure is an internal error. n >= 2.
ProperMatrix proper_matrix(std::span<const PiecewiseConstantMeasure> ms);

// Every player values every share at exactly 1/n: each refinement cell is
// split into n contiguous slices of equal length, players left to right.
GeneralDivision exact_division(std::span<const PiecewiseConstantMeasure> ms);

// Finds a division whose sharing matrix equals `target` exactly, by solving
// for per-cell fractions with an exact simplex. For piecewise-constant
// measures the per-cell family captures every achievable matrix, so nullopt
// (or the Infeasible error from the throwing variant) means no division
// realizes the target.
std::optional<GeneralDivision> try_realize_sharing_matrix(
    const SharingMatrix& target, std::span<const PiecewiseConstantMeasure> ms);
GeneralDivision realize_sharing_matrix(const SharingMatrix& target,
                                       std::span<const PiecewiseConstantMeasure> ms);

struct StrongKResult {
    GeneralDivision division;
    Rational epsilon; // the perturbation size that was realized
};

// Realizes E + eps*Q for the largest workable eps found by halving from the
// entry-range bound; the result is strong k-proportional. Precondition error
// when strong_k_exists(ms, k) is false.
StrongKResult strong_k_division(std::span<const PiecewiseConstantMeasure> ms, int k);

} // namespace fairdiv
