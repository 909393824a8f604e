#include "measures.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace fairdiv {

namespace {

const Rational kZero = 0;
const Rational kOne = 1;

void require_unit_range(const Rational& r, const char* what) {
    if (r < kZero || r > kOne) {
        raise(ErrorKind::Validation,
              std::string(what) + " outside [0,1]: " + r.str());
    }
}

} // namespace

std::string geometry_name(Geometry g) { return g == Geometry::Cake ? "cake" : "pie"; }

Interval Interval::cake(Rational start, Rational end) {
    require_unit_range(start, "interval start");
    require_unit_range(end, "interval end");
    if (end < start) {
        raise(ErrorKind::Validation,
              "cake interval with start > end: [" + start.str() + ", " + end.str() + "]");
    }
    return Interval(Geometry::Cake, std::move(start), std::move(end));
}

Interval Interval::pie(Rational start, Rational end) {
    require_unit_range(start, "arc start");
    require_unit_range(end, "arc end");
    if (start == kOne) start = kZero;
    if (start == end) return Interval(Geometry::Pie, start, start); // empty
    if (end == kZero || end == kOne) {
        // An arc ending at the seam is the plain segment [start, 1].
        return Interval(Geometry::Pie, std::move(start), kOne);
    }
    if (start == kZero && end == kOne) return Interval(Geometry::Pie, kZero, kOne);
    return Interval(Geometry::Pie, std::move(start), std::move(end));
}

Interval Interval::make(Geometry g, Rational start, Rational end) {
    return g == Geometry::Cake ? cake(std::move(start), std::move(end))
                               : pie(std::move(start), std::move(end));
}

Interval Interval::whole(Geometry g) { return Interval(g, 0, 1); }

Rational Interval::length() const {
    if (wraps()) return (kOne - start_) + end_;
    return end_ - start_;
}

std::vector<std::pair<Rational, Rational>> Interval::segments() const {
    if (empty()) return {};
    if (wraps()) return {{kZero, end_}, {start_, kOne}};
    return {{start_, end_}};
}

std::string Interval::str() const {
    return "[" + start_.str() + ", " + end_.str() + "]";
}

PiecewiseConstantMeasure PiecewiseConstantMeasure::from_cells(Geometry g,
                                                              std::vector<Rational> breakpoints,
                                                              std::vector<Rational> values) {
    if (breakpoints.size() < 2 || breakpoints.front() != kZero || breakpoints.back() != kOne) {
        raise(ErrorKind::Validation, "density breakpoints must run from 0 to 1");
    }
    if (values.size() + 1 != breakpoints.size()) {
        raise(ErrorKind::Validation, "density needs one value per cell");
    }
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) {
            raise(ErrorKind::Validation, "density breakpoints must be strictly increasing");
        }
    }
    Rational total;
    for (std::size_t c = 0; c < values.size(); ++c) {
        if (values[c] < kZero) {
            raise(ErrorKind::Validation, "negative density value " + values[c].str());
        }
        total += values[c] * (breakpoints[c + 1] - breakpoints[c]);
    }
    if (total != kOne) {
        raise(ErrorKind::Validation,
              "density integrates to " + total.str() + ", deficit " + (kOne - total).str());
    }
    // Merge adjacent cells with equal density.
    std::vector<Rational> bp{breakpoints.front()};
    std::vector<Rational> vs;
    for (std::size_t c = 0; c < values.size(); ++c) {
        if (!vs.empty() && vs.back() == values[c]) {
            bp.back() = breakpoints[c + 1];
        } else {
            vs.push_back(values[c]);
            bp.push_back(breakpoints[c + 1]);
        }
    }
    return PiecewiseConstantMeasure(g, std::move(bp), std::move(vs));
}

PiecewiseConstantMeasure PiecewiseConstantMeasure::from_segments(
    Geometry g, std::vector<DensitySegment> segments) {
    std::vector<std::pair<Rational, Rational>> spans;
    for (const auto& s : segments) {
        require_unit_range(s.start, "density segment start");
        require_unit_range(s.end, "density segment end");
        if (s.end < s.start) {
            raise(ErrorKind::Validation, "density segment with start > end: [" + s.start.str() +
                                             ", " + s.end.str() + "]");
        }
        if (s.value < kZero) {
            raise(ErrorKind::Validation, "negative density value " + s.value.str());
        }
        if (s.start < s.end) spans.emplace_back(s.start, s.end);
    }
    auto check = detail::check_disjoint(spans);
    if (!check.ok) {
        raise(ErrorKind::Validation, "density segments overlap on [" + check.overlap_start.str() +
                                         ", " + check.overlap_end.str() + "]");
    }

    std::vector<Rational> bp{kZero, kOne};
    for (const auto& s : segments) {
        bp.push_back(s.start);
        bp.push_back(s.end);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

    std::vector<Rational> vs(bp.size() - 1, kZero);
    for (std::size_t c = 0; c + 1 < bp.size(); ++c) {
        for (const auto& s : segments) {
            if (s.start <= bp[c] && bp[c + 1] <= s.end && s.start < s.end) {
                vs[c] = s.value;
                break;
            }
        }
    }
    return from_cells(g, std::move(bp), std::move(vs));
}

PiecewiseConstantMeasure PiecewiseConstantMeasure::uniform(Geometry g) {
    return PiecewiseConstantMeasure(g, {kZero, kOne}, {kOne});
}

Rational PiecewiseConstantMeasure::max_density() const {
    Rational m = values_.front();
    for (const auto& v : values_) m = max(m, v);
    return m;
}

Rational PiecewiseConstantMeasure::integral(const Rational& a, const Rational& b) const {
    if (a > b) raise(ErrorKind::InvalidArgument, "integral bounds out of order");
    require_unit_range(a, "integral bound");
    require_unit_range(b, "integral bound");
    Rational total;
    for (std::size_t c = 0; c + 1 < breakpoints_.size(); ++c) {
        if (values_[c].is_zero()) continue;
        const Rational& lo = max(a, breakpoints_[c]);
        const Rational& hi = min(b, breakpoints_[c + 1]);
        if (lo < hi) total += values_[c] * (hi - lo);
    }
    return total;
}

Rational measure_of(const PiecewiseConstantMeasure& m, const Interval& s) {
    if (m.geometry() != s.geometry()) {
        raise(ErrorKind::GeometryMismatch, "measure on " + geometry_name(m.geometry()) +
                                               " evaluated on a " + geometry_name(s.geometry()) +
                                               " interval");
    }
    Rational total;
    for (const auto& [a, b] : s.segments()) total += m.integral(a, b);
    return total;
}

Rational measure_of(const PiecewiseConstantMeasure& m, std::span<const Interval> pieces) {
    std::vector<std::pair<Rational, Rational>> spans;
    for (const auto& piece : pieces) {
        if (piece.geometry() != m.geometry()) {
            raise(ErrorKind::GeometryMismatch, "interval geometry does not match the measure");
        }
        for (auto& seg : piece.segments()) spans.push_back(std::move(seg));
    }
    auto check = detail::check_disjoint(spans);
    if (!check.ok) {
        raise(ErrorKind::Validation, "invalid set: intervals overlap on [" +
                                         check.overlap_start.str() + ", " +
                                         check.overlap_end.str() + "]");
    }
    Rational total;
    for (const auto& [a, b] : spans) total += m.integral(a, b);
    return total;
}

Refinement common_refinement(std::span<const PiecewiseConstantMeasure> ms) {
    if (ms.empty()) raise(ErrorKind::InvalidArgument, "refinement of an empty measure list");
    Geometry g = ms.front().geometry();
    for (const auto& m : ms) {
        if (m.geometry() != g) {
            raise(ErrorKind::GeometryMismatch, "measures mix cake and pie geometries");
        }
    }

    std::vector<Rational> bp;
    for (const auto& m : ms) {
        bp.insert(bp.end(), m.breakpoints().begin(), m.breakpoints().end());
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

    Refinement out;
    out.weights.assign(ms.size(), {});
    out.densities.assign(ms.size(), {});
    std::vector<std::size_t> cursor(ms.size(), 0);
    for (std::size_t c = 0; c + 1 < bp.size(); ++c) {
        Rational len = bp[c + 1] - bp[c];
        if (len.is_zero()) continue;
        out.cells.push_back(Interval::make(g, bp[c], bp[c + 1]));
        for (std::size_t i = 0; i < ms.size(); ++i) {
            const auto& mbp = ms[i].breakpoints();
            while (mbp[cursor[i] + 1] <= bp[c]) ++cursor[i];
            const Rational& d = ms[i].values()[cursor[i]];
            out.densities[i].push_back(d);
            out.weights[i].push_back(d * len);
        }
    }

    for (std::size_t i = 0; i < ms.size(); ++i) {
        Rational row;
        for (const auto& w : out.weights[i]) row += w;
        if (row != kOne) raise(ErrorKind::Internal, "refinement row sum " + row.str());
    }
    return out;
}

PiecewiseConstantMeasure with_geometry(const PiecewiseConstantMeasure& m, Geometry g) {
    return PiecewiseConstantMeasure::from_cells(g, m.breakpoints(), m.values());
}

bool measures_equal(const PiecewiseConstantMeasure& a, const PiecewiseConstantMeasure& b) {
    std::vector<PiecewiseConstantMeasure> pair{a, b};
    auto ref = common_refinement(pair);
    for (std::size_t c = 0; c < ref.cells.size(); ++c) {
        if (ref.densities[0][c] != ref.densities[1][c]) return false;
    }
    return true;
}

std::vector<std::vector<Rational>> gram(std::span<const PiecewiseConstantMeasure> ms) {
    auto ref = common_refinement(ms);
    std::size_t n = ms.size();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (std::size_t c = 0; c < ref.cells.size(); ++c) {
        Rational len = ref.cells[c].length();
        for (std::size_t i = 0; i < n; ++i) {
            if (ref.densities[i][c].is_zero()) continue;
            for (std::size_t j = i; j < n; ++j) {
                Rational term = ref.densities[i][c] * ref.densities[j][c] * len;
                g[i][j] += term;
                if (i != j) g[j][i] = g[i][j];
            }
        }
    }
    return g;
}

namespace detail {

SegmentCheck check_disjoint(std::vector<std::pair<Rational, Rational>>& segments) {
    SegmentCheck out;
    std::sort(segments.begin(), segments.end());
    for (std::size_t i = 0; i < segments.size(); ++i) {
        out.total_length += segments[i].second - segments[i].first;
        if (i > 0 && segments[i].first < segments[i - 1].second) {
            out.ok = false;
            out.overlap_a = i - 1;
            out.overlap_b = i;
            out.overlap_start = segments[i].first;
            out.overlap_end = min(segments[i - 1].second, segments[i].second);
            return out;
        }
    }
    return out;
}

} // namespace detail

} // namespace fairdiv
