#include "algorithms.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace fairdiv {

namespace {

const Rational kZero = 0;
const Rational kOne = 1;

// Leftmost b >= a with mu([a,b]) = v. Cumulative mass is continuous and
// nondecreasing, so within a positive-density cell the hit point is unique;
// zero-density plateaus resolve to their left edge.
std::optional<Rational> leftmost_cut(const PiecewiseConstantMeasure& m, const Rational& a,
                                     const Rational& v) {
    if (v < kZero) raise(ErrorKind::InvalidArgument, "cut target must be nonnegative");
    if (a < kZero || a > kOne) raise(ErrorKind::InvalidArgument, "cut start outside [0,1]");
    if (v.is_zero()) return a;
    const auto& bp = m.breakpoints();
    const auto& vals = m.values();
    Rational acc;
    for (std::size_t c = 0; c + 1 < bp.size(); ++c) {
        if (bp[c + 1] <= a || vals[c].is_zero()) continue;
        Rational lo = max(a, bp[c]);
        Rational gain = vals[c] * (bp[c + 1] - lo);
        if (acc + gain >= v) return lo + (v - acc) / vals[c];
        acc += gain;
    }
    return std::nullopt; // [a,1] holds less than v
}

void require_cake(std::span<RWOracle> oracles, const char* name) {
    for (auto& o : oracles) {
        if (o.measure().geometry() != Geometry::Cake) {
            raise(ErrorKind::GeometryMismatch, std::string(name) + " runs on the cake only");
        }
    }
}

} // namespace

Rational RWOracle::eval(const Rational& a, const Rational& b) {
    ++ledger_->eval_count;
    return m_->integral(a, b);
}

std::optional<Rational> RWOracle::cut(const Rational& a, const Rational& v) {
    ++ledger_->cut_count;
    return leftmost_cut(*m_, a, v);
}

ConnectedDivision cut_and_choose(std::span<RWOracle> oracles) {
    if (oracles.size() != 2) {
        raise(ErrorKind::InvalidArgument, "cut and choose needs exactly two players");
    }
    require_cake(oracles, "cut and choose");
    Rational half(1, 2);
    auto c = oracles[0].cut(kZero, half);
    if (!c) raise(ErrorKind::Internal, "half-point query failed on a probability measure");
    Rational left = oracles[1].eval(kZero, *c);
    std::vector<int> assignment = left >= half ? std::vector<int>{1, 0}
                                               : std::vector<int>{0, 1};
    return ConnectedDivision::cake({*c}, std::move(assignment));
}

ConnectedDivision last_diminisher(std::span<RWOracle> oracles) {
    int n = static_cast<int>(oracles.size());
    if (n < 2) raise(ErrorKind::InvalidArgument, "last diminisher needs at least two players");
    require_cake(oracles, "last diminisher");
    Rational target(1, n);
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<Rational> cuts;
    std::vector<int> assignment;
    Rational a = kZero;
    while (remaining.size() > 1) {
        int winner = -1;
        Rational best;
        for (int i : remaining) {
            auto b = oracles[i].cut(a, target);
            if (!b) raise(ErrorKind::Internal, "remaining cake worth less than a share");
            if (winner < 0 || *b < best) {
                winner = i;
                best = *b;
            }
        }
        cuts.push_back(best);
        assignment.push_back(winner);
        remaining.erase(std::find(remaining.begin(), remaining.end(), winner));
        a = best;
    }
    assignment.push_back(remaining.front());
    return ConnectedDivision::cake(std::move(cuts), std::move(assignment));
}

namespace {

// Pieces come out left to right as (player, right endpoint of the piece).
void even_paz_split(std::span<RWOracle> oracles, const std::vector<int>& group,
                    const Rational& a, const Rational& b,
                    std::vector<std::pair<int, Rational>>& out) {
    if (group.size() == 1) {
        out.emplace_back(group.front(), b);
        return;
    }
    int m = static_cast<int>(group.size());
    int h = (m + 1) / 2;
    struct Mark {
        Rational x;
        int player;
    };
    std::vector<Mark> marks;
    marks.reserve(group.size());
    for (int i : group) {
        Rational value = oracles[i].eval(a, b);
        auto x = oracles[i].cut(a, value * Rational(h, m));
        if (!x) raise(ErrorKind::Internal, "fraction mark beyond the available mass");
        marks.push_back({*x, i});
    }
    std::sort(marks.begin(), marks.end(), [](const Mark& l, const Mark& r) {
        if (l.x != r.x) return l.x < r.x;
        return l.player < r.player;
    });
    Rational median = marks[h - 1].x;
    std::vector<int> left;
    std::vector<int> right;
    for (int i = 0; i < m; ++i) (i < h ? left : right).push_back(marks[i].player);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    even_paz_split(oracles, left, a, median, out);
    even_paz_split(oracles, right, median, b, out);
}

} // namespace

ConnectedDivision even_paz(std::span<RWOracle> oracles) {
    int n = static_cast<int>(oracles.size());
    if (n < 1) raise(ErrorKind::InvalidArgument, "even_paz needs at least one player");
    require_cake(oracles, "even_paz");
    std::vector<int> everyone(n);
    std::iota(everyone.begin(), everyone.end(), 0);
    std::vector<std::pair<int, Rational>> pieces;
    even_paz_split(oracles, everyone, kZero, kOne, pieces);
    std::vector<Rational> cuts;
    std::vector<int> assignment;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        assignment.push_back(pieces[j].first);
        if (j + 1 < pieces.size()) cuts.push_back(pieces[j].second);
    }
    return ConnectedDivision::cake(std::move(cuts), std::move(assignment));
}

namespace {

// Affine form a + b*p in the walk parameter p.
struct Aff {
    Rational a;
    Rational b;
    Rational at(const Rational& p) const { return a + b * p; }
};

// Cumulative mass table for one measure: pre[c] is the mass of [0, bp[c]].
struct Cum {
    const PiecewiseConstantMeasure* m;
    std::vector<Rational> pre;
};

Cum make_cum(const PiecewiseConstantMeasure& m) {
    Cum c{&m, {}};
    const auto& bp = m.breakpoints();
    const auto& vals = m.values();
    c.pre.resize(bp.size());
    c.pre[0] = kZero;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        c.pre[i + 1] = c.pre[i] + vals[i] * (bp[i + 1] - bp[i]);
    }
    return c;
}

// An affine form together with the largest parameter value (inclusive) for
// which it stays valid.
struct CellForm {
    Aff f;
    Rational bound;
};

// F(z(p)) as an affine form, using the cell z occupies just above `base`.
// Cuts never move left as p grows, so ties at a cell's right end resolve
// into the next cell.
CellForm cum_form(const Cum& cum, const Aff& z, const Rational& base, const Rational& cap) {
    const auto& bp = cum.m->breakpoints();
    const auto& vals = cum.m->values();
    Rational z0 = z.at(base);
    std::size_t c = 0;
    while (c + 2 < bp.size() && bp[c + 1] <= z0) ++c;
    Aff f{cum.pre[c] + vals[c] * (z.a - bp[c]), vals[c] * z.b};
    Rational bound = cap;
    if (z.b > kZero) bound = std::min(bound, (bp[c + 1] - z.a) / z.b);
    return {f, bound};
}

// Leftmost x with F(x) = tau(p), as an affine form; nullopt when the target
// exceeds the player's total mass just above `base`.
std::optional<CellForm> inv_form(const Cum& cum, const Aff& tau, const Rational& base,
                                 const Rational& cap) {
    const auto& bp = cum.m->breakpoints();
    const auto& vals = cum.m->values();
    Rational t0 = tau.at(base);
    for (std::size_t c = 0; c + 1 < bp.size(); ++c) {
        if (vals[c].is_zero()) continue;
        if (cum.pre[c + 1] < t0) continue;
        if (cum.pre[c + 1] == t0 && tau.b > kZero) continue;
        Aff x{bp[c] + (tau.a - cum.pre[c]) / vals[c], tau.b / vals[c]};
        Rational bound = cap;
        if (tau.b > kZero) bound = std::min(bound, (cum.pre[c + 1] - tau.a) / tau.b);
        return CellForm{x, bound};
    }
    return std::nullopt;
}

// Every cut as an affine function of the walk parameter, assuming piece j is
// worth exactly target(p) to its owner. ok=false when some interior piece
// runs out of mass just above `base`. Valid on (base, bound].
struct SymbolicCuts {
    bool ok = false;
    std::vector<Aff> cuts;
    Aff tail{};
    Rational bound;
};

SymbolicCuts build_cuts(std::span<const Cum> cums, std::span<const int> players,
                        const Aff& start, const Aff& target, const Rational& base,
                        const Rational& cap) {
    SymbolicCuts out;
    out.bound = cap;
    Aff z = start;
    for (std::size_t j = 0; j + 1 < players.size(); ++j) {
        const Cum& cum = cums[players[j]];
        CellForm f = cum_form(cum, z, base, out.bound);
        Aff tau{f.f.a + target.a, f.f.b + target.b};
        auto nx = inv_form(cum, tau, base, f.bound);
        if (!nx) return out;
        out.bound = nx->bound;
        z = nx->f;
        out.cuts.push_back(z);
        if (out.bound <= base) raise(ErrorKind::Internal, "cut walk validity range is empty");
    }
    CellForm last = cum_form(cums[players.back()], z, base, out.bound);
    out.bound = last.bound;
    out.tail = Aff{kOne - last.f.a, kZero - last.f.b};
    out.ok = true;
    if (out.bound <= base) raise(ErrorKind::Internal, "cut walk validity range is empty");
    return out;
}

std::vector<Rational> eval_cuts(const std::vector<Aff>& cs, const Rational& p) {
    std::vector<Rational> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(c.at(p));
    return out;
}

// Root of f(p) = g(p); nullopt when parallel.
std::optional<Rational> aff_root(const Aff& f, const Aff& g) {
    Rational db = f.b - g.b;
    if (db.is_zero()) return std::nullopt;
    return (g.a - f.a) / db;
}

// Right end of the zero-density run of m starting at x (x itself when the
// density at x is positive).
Rational zero_run_end(const PiecewiseConstantMeasure& m, const Rational& x) {
    const auto& bp = m.breakpoints();
    const auto& vals = m.values();
    Rational r = x;
    std::size_t c = 0;
    while (c + 1 < bp.size()) {
        if (bp[c + 1] <= r) {
            ++c;
            continue;
        }
        if (!vals[c].is_zero()) break;
        r = bp[c + 1];
        ++c;
    }
    return r;
}

// Cuts for the pieces owned by `players`, starting at x0, each worth exactly
// v to its owner. Leftmost placement can fail here even though a division
// exists: the remainder's value jumps down wherever a cut skips a run its
// owner values at zero while later players do not. Such a cut may instead be
// placed anywhere inside that run, and sliding it moves every later cut
// continuously, so the gap left by a jump is always reachable. The slide
// position is again piecewise affine, hence solved exactly.
std::optional<std::vector<Rational>> exact_suffix(std::span<const Cum> cums,
                                                  std::span<const int> players,
                                                  const Rational& x0, const Rational& v,
                                                  int& steps) {
    if (++steps > 200000) raise(ErrorKind::Internal, "equitable walk did not terminate");
    const PiecewiseConstantMeasure& first = *cums[players[0]].m;
    if (players.size() == 1) {
        if (first.integral(x0, kOne) == v) return std::vector<Rational>{};
        return std::nullopt;
    }
    auto l = leftmost_cut(first, x0, v);
    if (!l) return std::nullopt;
    auto rest = players.subspan(1);
    if (auto tail = exact_suffix(cums, rest, *l, v, steps)) {
        tail->insert(tail->begin(), *l);
        return tail;
    }
    Rational run_end = zero_run_end(first, *l);
    if (run_end == *l) return std::nullopt;
    Rational t0 = *l;
    while (true) {
        if (++steps > 200000) raise(ErrorKind::Internal, "equitable walk did not terminate");
        SymbolicCuts sym = build_cuts(cums, rest, Aff{kZero, kOne}, Aff{v, kZero}, t0, run_end);
        // The suffix dying or overshooting just above t0 both mean the slide
        // cannot pass t0; the cuts at exactly t0 are still feasible, so any
        // remaining slack lives in a later player's zero run.
        if (!sym.ok || sym.tail.at(t0) < v) {
            if (t0 == *l) return std::nullopt;
            auto deeper = exact_suffix(cums, rest, t0, v, steps);
            if (!deeper) return std::nullopt;
            deeper->insert(deeper->begin(), t0);
            return deeper;
        }
        Rational gap = sym.tail.at(t0) - v;
        auto hit = [&](const Rational& t) {
            std::vector<Rational> cuts = eval_cuts(sym.cuts, t);
            cuts.insert(cuts.begin(), t);
            return cuts;
        };
        if (gap.is_zero()) return hit(t0);
        if (auto root = aff_root(sym.tail, Aff{v, kZero});
            root && *root > t0 && *root <= sym.bound) {
            return hit(*root);
        }
        if (sym.bound == run_end) {
            auto deeper = exact_suffix(cums, rest, run_end, v, steps);
            if (!deeper) return std::nullopt;
            deeper->insert(deeper->begin(), run_end);
            return deeper;
        }
        t0 = sym.bound;
    }
}

void require_same_geometry(std::span<const PiecewiseConstantMeasure> ms) {
    for (const auto& m : ms) {
        if (m.geometry() != ms.front().geometry()) {
            raise(ErrorKind::GeometryMismatch, "measures mix cake and pie geometries");
        }
    }
}

} // namespace

EquitableResult equitable_connected(std::span<const PiecewiseConstantMeasure> ms,
                                    const std::vector<int>& order) {
    int n = static_cast<int>(ms.size());
    if (n < 1) raise(ErrorKind::InvalidArgument, "need at least one measure");
    require_same_geometry(ms);
    if (static_cast<int>(order.size()) != n) {
        raise(ErrorKind::InvalidArgument, "order must list every player once");
    }
    {
        std::vector<bool> seen(n, false);
        for (int p : order) {
            if (p < 0 || p >= n || seen[p]) {
                raise(ErrorKind::InvalidArgument, "order must list every player once");
            }
            seen[p] = true;
        }
    }

    Geometry original = ms.front().geometry();
    MeasureList opened;
    if (original == Geometry::Pie) {
        for (const auto& m : ms) opened.push_back(with_geometry(m, Geometry::Cake));
    }
    std::span<const PiecewiseConstantMeasure> work =
        original == Geometry::Pie ? std::span<const PiecewiseConstantMeasure>(opened) : ms;

    // Every piece below is verified before it leaves this function: piece j
    // must be worth exactly v to order[j].
    auto finish = [&](std::vector<Rational> cuts, const Rational& v, int iterations) {
        Rational x = kZero;
        for (int j = 0; j < n; ++j) {
            Rational end = j + 1 < n ? cuts[j] : kOne;
            if (end < x || end > kOne) {
                raise(ErrorKind::Internal, "equitable walk produced unordered cuts");
            }
            if (work[order[j]].integral(x, end) != v) {
                raise(ErrorKind::Internal, "equitable walk missed the common value");
            }
            x = end;
        }
        ConnectedDivision d = ConnectedDivision::cake(std::move(cuts), order);
        if (original == Geometry::Pie) d = cake_as_pie(d);
        return EquitableResult{std::move(d), v, order, iterations};
    };

    if (n == 1) return finish({}, kOne, 0);

    std::vector<Cum> cums;
    cums.reserve(work.size());
    for (const auto& m : work) cums.push_back(make_cum(m));

    // Walk v upward through the affine pieces of the leftmost cut positions.
    // On each piece the last player's remainder is affine and non-increasing
    // in v, so tail(v) = v is solved exactly. When the remainder jumps below
    // the diagonal at a piece boundary (or leftmost placement dies there),
    // the boundary is the common value and some cut has to split a
    // zero-density run; exact_suffix rebuilds the cuts that way.
    int steps = 0;
    Rational v0 = kZero;
    while (true) {
        if (++steps > 200000) raise(ErrorKind::Internal, "equitable walk did not terminate");
        SymbolicCuts sym = build_cuts(cums, order, Aff{kZero, kZero}, Aff{kZero, kOne}, v0, kOne);
        bool jump = !sym.ok;
        if (sym.ok) {
            Rational gap = sym.tail.at(v0) - v0;
            if (gap.is_zero()) return finish(eval_cuts(sym.cuts, v0), v0, steps);
            jump = gap < kZero;
        }
        if (jump) {
            auto cuts = exact_suffix(cums, order, kZero, v0, steps);
            if (!cuts) raise(ErrorKind::Internal, "equitable split repair failed");
            return finish(std::move(*cuts), v0, steps);
        }
        if (auto root = aff_root(sym.tail, Aff{kZero, kOne});
            root && *root > v0 && *root <= sym.bound) {
            return finish(eval_cuts(sym.cuts, *root), *root, steps);
        }
        if (sym.bound >= kOne) {
            raise(ErrorKind::Internal, "equitable walk passed the whole cake without a root");
        }
        v0 = sym.bound;
    }
}

EquitableResult equitable_connected_search(std::span<const PiecewiseConstantMeasure> ms) {
    int n = static_cast<int>(ms.size());
    if (n < 1) raise(ErrorKind::InvalidArgument, "need at least one measure");
    if (n > 7) {
        raise(ErrorKind::Limit,
              "order search tries all n! orders; supported for n <= 7, got n = " +
                  std::to_string(n));
    }
    Rational threshold(1, n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        EquitableResult r = equitable_connected(ms, order);
        if (r.common_value >= threshold) return r;
    } while (std::next_permutation(order.begin(), order.end()));
    raise(ErrorKind::Limit, "no player order reached the proportional threshold");
}

} // namespace fairdiv
