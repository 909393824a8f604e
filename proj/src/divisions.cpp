#include "divisions.hpp"

#include <algorithm>
#include <optional>

#include "errors.hpp"

namespace fairdiv {

namespace {

const Rational kZero = 0;
const Rational kOne = 1;

void require_permutation(const std::vector<int>& assignment) {
    int n = static_cast<int>(assignment.size());
    if (n == 0) raise(ErrorKind::Validation, "division needs at least one player");
    std::vector<bool> seen(n, false);
    for (int p : assignment) {
        if (p < 0 || p >= n || seen[p]) {
            raise(ErrorKind::Validation, "assignment is not a permutation of 0.." +
                                             std::to_string(n - 1));
        }
        seen[p] = true;
    }
}

void require_sorted(const std::vector<Rational>& cuts) {
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] < cuts[i]) {
            raise(ErrorKind::Validation, "cuts out of order: " + cuts[i].str() + " before " +
                                             cuts[i + 1].str());
        }
    }
}

struct TaggedSeg {
    Rational start;
    Rational end;
    int owner;
};

// First positive-length overlap among the segments, or nullopt. Mutates order.
std::optional<Violation> find_overlap(std::vector<TaggedSeg>& segs, const std::string& noun) {
    std::sort(segs.begin(), segs.end(), [](const TaggedSeg& a, const TaggedSeg& b) {
        if (a.start != b.start) return a.start < b.start;
        return a.end < b.end;
    });
    for (std::size_t i = 1; i < segs.size(); ++i) {
        const auto& prev = segs[i - 1];
        const auto& cur = segs[i];
        if (cur.start < prev.end) {
            Rational hi = min(prev.end, cur.end);
            return Violation{"overlap", noun + " " + std::to_string(prev.owner) + " and " +
                                            std::to_string(cur.owner) + " overlap on [" +
                                            cur.start.str() + ", " + hi.str() + "]"};
        }
    }
    return std::nullopt;
}

std::vector<Violation> check_partition(std::vector<TaggedSeg>& segs, const std::string& noun) {
    std::vector<Violation> out;
    if (auto v = find_overlap(segs, noun)) {
        out.push_back(*v);
        return out;
    }
    Rational total;
    for (const auto& s : segs) total += s.end - s.start;
    if (total != kOne) {
        out.push_back(Violation{"coverage", "uncovered length " + (kOne - total).str()});
    }
    return out;
}

} // namespace

ConnectedDivision::ConnectedDivision(Geometry g, std::vector<Rational> cuts,
                                     std::vector<int> assignment)
    : geometry_(g), cuts_(std::move(cuts)), assignment_(std::move(assignment)) {
    require_permutation(assignment_);
    require_sorted(cuts_);
    int n = players();
    if (geometry_ == Geometry::Cake) {
        if (static_cast<int>(cuts_.size()) != n - 1) {
            raise(ErrorKind::Validation, "cake division with " + std::to_string(n) +
                                             " players needs " + std::to_string(n - 1) +
                                             " interior cuts, got " +
                                             std::to_string(cuts_.size()));
        }
        for (const auto& c : cuts_) {
            if (c < kZero || c > kOne) {
                raise(ErrorKind::Validation, "cut outside [0,1]: " + c.str());
            }
        }
    } else {
        if (static_cast<int>(cuts_.size()) != n) {
            raise(ErrorKind::Validation, "pie division with " + std::to_string(n) +
                                             " players needs " + std::to_string(n) +
                                             " cuts, got " + std::to_string(cuts_.size()));
        }
        for (const auto& c : cuts_) {
            if (c < kZero || c >= kOne) {
                raise(ErrorKind::Validation, "pie cut outside [0,1): " + c.str());
            }
        }
    }
    piece_of_.assign(n, 0);
    for (int j = 0; j < n; ++j) piece_of_[assignment_[j]] = j;
}

ConnectedDivision ConnectedDivision::cake(std::vector<Rational> interior_cuts,
                                          std::vector<int> assignment) {
    return ConnectedDivision(Geometry::Cake, std::move(interior_cuts), std::move(assignment));
}

ConnectedDivision ConnectedDivision::pie(std::vector<Rational> cuts,
                                         std::vector<int> assignment) {
    return ConnectedDivision(Geometry::Pie, std::move(cuts), std::move(assignment));
}

ConnectedDivision ConnectedDivision::make(Geometry g, std::vector<Rational> cuts,
                                          std::vector<int> assignment) {
    return ConnectedDivision(g, std::move(cuts), std::move(assignment));
}

Interval ConnectedDivision::piece(int piece_index) const {
    int n = players();
    if (piece_index < 0 || piece_index >= n) {
        raise(ErrorKind::InvalidArgument, "piece index out of range");
    }
    if (geometry_ == Geometry::Cake) {
        const Rational& lo = piece_index == 0 ? kZero : cuts_[piece_index - 1];
        const Rational& hi = piece_index == n - 1 ? kOne : cuts_[piece_index];
        return Interval::cake(lo, hi);
    }
    if (piece_index == n - 1) {
        // Closing arc; when every cut coincides it is the whole circle.
        if (cuts_[n - 1] == cuts_[0]) return Interval::whole(Geometry::Pie);
        return Interval::pie(cuts_[n - 1], cuts_[0]);
    }
    return Interval::pie(cuts_[piece_index], cuts_[piece_index + 1]);
}

int ConnectedDivision::piece_of(int player) const {
    if (player < 0 || player >= players()) {
        raise(ErrorKind::InvalidArgument, "player index out of range");
    }
    return piece_of_[player];
}

GeneralDivision GeneralDivision::make(Geometry g, std::vector<std::vector<Interval>> shares) {
    if (shares.empty()) raise(ErrorKind::Validation, "division needs at least one player");
    for (const auto& share : shares) {
        for (const auto& iv : share) {
            if (iv.geometry() != g) {
                raise(ErrorKind::GeometryMismatch,
                      "share interval geometry does not match the division");
            }
        }
    }
    return GeneralDivision(g, std::move(shares));
}

std::vector<Violation> validate(const ConnectedDivision& d) {
    std::vector<TaggedSeg> segs;
    for (int j = 0; j < d.players(); ++j) {
        for (auto& [a, b] : d.piece(j).segments()) segs.push_back({a, b, j});
    }
    return check_partition(segs, "pieces");
}

std::vector<Violation> validate(const GeneralDivision& d) {
    std::vector<TaggedSeg> segs;
    for (int p = 0; p < d.players(); ++p) {
        for (const auto& iv : d.shares()[p]) {
            for (auto& [a, b] : iv.segments()) segs.push_back({a, b, p});
        }
    }
    return check_partition(segs, "shares of players");
}

SharingMatrix SharingMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) raise(ErrorKind::Validation, "empty sharing matrix");
    std::size_t n = rows.size();
    for (const auto& row : rows) {
        if (row.size() != n) raise(ErrorKind::Validation, "sharing matrix is not square");
        Rational sum;
        for (const auto& e : row) {
            if (e < kZero || e > kOne) {
                raise(ErrorKind::Validation, "sharing matrix entry outside [0,1]: " + e.str());
            }
            sum += e;
        }
        if (sum != kOne) {
            raise(ErrorKind::Validation, "sharing matrix row sums to " + sum.str());
        }
    }
    return SharingMatrix(std::move(rows));
}

namespace {

template <typename ShareFn>
SharingMatrix matrix_from_shares(int n, std::span<const PiecewiseConstantMeasure> ms,
                                 ShareFn&& share_value) {
    if (static_cast<int>(ms.size()) != n) {
        raise(ErrorKind::InvalidArgument, "need one measure per player: " +
                                              std::to_string(ms.size()) + " measures for " +
                                              std::to_string(n) + " players");
    }
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = share_value(ms[i], j);
    }
    return SharingMatrix::from_rows(std::move(rows));
}

} // namespace

SharingMatrix sharing_matrix(const ConnectedDivision& d,
                             std::span<const PiecewiseConstantMeasure> ms) {
    return matrix_from_shares(d.players(), ms,
                              [&](const PiecewiseConstantMeasure& m, int j) {
                                  return measure_of(m, d.share_of(j));
                              });
}

SharingMatrix sharing_matrix(const GeneralDivision& d,
                             std::span<const PiecewiseConstantMeasure> ms) {
    auto violations = validate(d);
    if (!violations.empty()) {
        raise(ErrorKind::Validation, "invalid division: " + violations.front().message);
    }
    return matrix_from_shares(d.players(), ms,
                              [&](const PiecewiseConstantMeasure& m, int j) {
                                  return measure_of(m, std::span<const Interval>(d.shares()[j]));
                              });
}

GeneralDivision to_general(const ConnectedDivision& d) {
    std::vector<std::vector<Interval>> shares(d.players());
    for (int p = 0; p < d.players(); ++p) {
        Interval piece = d.share_of(p);
        if (!piece.empty()) shares[p].push_back(piece);
    }
    return GeneralDivision::make(d.geometry(), std::move(shares));
}

ConnectedDivision cake_as_pie(const ConnectedDivision& d) {
    if (d.geometry() != Geometry::Cake) {
        raise(ErrorKind::GeometryMismatch, "cake_as_pie needs a cake division");
    }
    std::vector<Rational> cuts{kZero};
    for (const auto& c : d.cuts()) {
        if (c == kOne) {
            raise(ErrorKind::Validation, "cannot open a division with an interior cut at 1 "
                                         "onto the pie");
        }
        cuts.push_back(c);
    }
    return ConnectedDivision::pie(std::move(cuts), d.assignment());
}

ConnectedDivision pie_rotate(const ConnectedDivision& d, const Rational& t) {
    if (d.geometry() != Geometry::Pie) {
        raise(ErrorKind::GeometryMismatch, "pie_rotate needs a pie division");
    }
    int n = d.players();
    Rational tm = t.mod1();
    std::vector<Rational> shifted(n);
    int wrapped = 0;
    for (int j = 0; j < n; ++j) {
        Rational s = d.cuts()[j] + tm;
        if (s >= kOne) {
            s -= kOne;
            ++wrapped;
        }
        shifted[j] = std::move(s);
    }
    // The wrapped suffix becomes the sorted prefix; relative order within each
    // group is unchanged, so the result is sorted and arcs keep their players.
    std::vector<Rational> cuts(n);
    std::vector<int> assign(n);
    int shift = n - wrapped;
    for (int k = 0; k < n; ++k) {
        int j = (k + shift) % n;
        cuts[k] = shifted[j];
        assign[k] = d.assignment()[j];
    }
    return ConnectedDivision::pie(std::move(cuts), std::move(assign));
}

} // namespace fairdiv
