#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace fairdiv {

// Cake = the interval [0,1]; Pie = [0,1] with the endpoints identified.
enum class Geometry { Cake, Pie };

std::string geometry_name(Geometry g);

// A closed subinterval of the cake, or an arc of the pie. Pie arcs run
// counterclockwise from start to end and may wrap through 0; a wrapping arc
// is stored with start > end and denotes [start,1] u [0,end]. Canonical form:
// an arc never both wraps and has start = end; the full circle is [0,1] and
// the empty arc has start = end.
class Interval {
  public:
    static Interval cake(Rational start, Rational end);
    static Interval pie(Rational start, Rational end);
    static Interval make(Geometry g, Rational start, Rational end);
    static Interval whole(Geometry g);

    const Rational& start() const { return start_; }
    const Rational& end() const { return end_; }
    Geometry geometry() const { return geometry_; }

    bool wraps() const { return end_ < start_; }
    Rational length() const;
    bool empty() const { return start_ == end_; }

    // The arc as one or two non-wrapping segments [a,b] with 0 <= a <= b <= 1.
    std::vector<std::pair<Rational, Rational>> segments() const;

    std::string str() const;

  private:
    Interval(Geometry g, Rational s, Rational e)
        : geometry_(g), start_(std::move(s)), end_(std::move(e)) {}

    Geometry geometry_;
    Rational start_;
    Rational end_;
};

// One constant-density stretch of an input description; gaps get density 0.
struct DensitySegment {
    Rational start;
    Rational end;
    Rational value;
};

// A non-atomic probability measure given by a piecewise-constant density on
// the cake or the pie: breakpoints 0 = b0 < b1 < ... < bm = 1 and one
// nonnegative density value per cell. The total integral is exactly 1.
class PiecewiseConstantMeasure {
  public:
    // Validates the probability-measure invariants; reports the exact deficit
    // when the density does not integrate to 1.
    static PiecewiseConstantMeasure from_cells(Geometry g, std::vector<Rational> breakpoints,
                                               std::vector<Rational> values);
    static PiecewiseConstantMeasure from_segments(Geometry g,
                                                  std::vector<DensitySegment> segments);
    static PiecewiseConstantMeasure uniform(Geometry g);

    Geometry geometry() const { return geometry_; }
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }

    Rational max_density() const;

    // Integral of the density over [a,b], 0 <= a <= b <= 1. Exact.
    Rational integral(const Rational& a, const Rational& b) const;

  private:
    PiecewiseConstantMeasure(Geometry g, std::vector<Rational> bp, std::vector<Rational> v)
        : geometry_(g), breakpoints_(std::move(bp)), values_(std::move(v)) {}

    Geometry geometry_;
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

using MeasureList = std::vector<PiecewiseConstantMeasure>;

Rational measure_of(const PiecewiseConstantMeasure& m, const Interval& s);

// Additive over a list of pairwise-disjoint intervals (overlap up to
// endpoints is fine); rejects overlapping lists.
Rational measure_of(const PiecewiseConstantMeasure& m, std::span<const Interval> pieces);

// The coarsest partition of X on which every input density is constant.
// weights[i][c] = value_i(cell c) * length(cell c); densities[i][c] = value_i(cell c).
// Zero-length cells are dropped, so every cell has positive length.
struct Refinement {
    std::vector<Interval> cells;
    std::vector<std::vector<Rational>> weights;
    std::vector<std::vector<Rational>> densities;
};

Refinement common_refinement(std::span<const PiecewiseConstantMeasure> ms);

// Almost-everywhere equality of densities.
bool measures_equal(const PiecewiseConstantMeasure& a, const PiecewiseConstantMeasure& b);

// Same density on the other geometry; normalization does not depend on it.
PiecewiseConstantMeasure with_geometry(const PiecewiseConstantMeasure& m, Geometry g);

// G[i][j] = integral of f_i * f_j over X. Symmetric, positive semidefinite.
std::vector<std::vector<Rational>> gram(std::span<const PiecewiseConstantMeasure> ms);

namespace detail {
// Sorts segments, verifies pairwise disjointness (returns the offending pair
// on positive-length overlap), and sums their lengths.
struct SegmentCheck {
    bool ok = true;
    Rational total_length;
    std::size_t overlap_a = 0; // indices into the flattened segment list
    std::size_t overlap_b = 0;
    Rational overlap_start;
    Rational overlap_end;
};
SegmentCheck check_disjoint(std::vector<std::pair<Rational, Rational>>& segments);
} // namespace detail

} // namespace fairdiv
