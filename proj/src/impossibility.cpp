#include "impossibility.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <thread>

#include "errors.hpp"
#include "fairness.hpp"

namespace fairdiv {

MeasureList pie_counterexample(int n) {
    if (n < 5)
        raise(ErrorKind::Precondition,
              "pie counterexample needs n >= 5: the squeeze on the uniform players requires at "
              "least three of them");
    MeasureList ms;
    ms.push_back(PiecewiseConstantMeasure::from_segments(
        Geometry::Pie, {{Rational(1, 6), Rational(1), Rational(6, 5)}}));
    ms.push_back(PiecewiseConstantMeasure::from_segments(
        Geometry::Pie, {{Rational(0), Rational(1, 2), Rational(6, 5)},
                        {Rational(2, 3), Rational(1), Rational(6, 5)}}));
    for (int i = 2; i < n; ++i)
        ms.push_back(PiecewiseConstantMeasure::uniform(Geometry::Pie));
    return ms;
}

MeasureList cake_counterexample(int n) {
    if (n < 2)
        raise(ErrorKind::Precondition, "cake counterexample needs at least 2 players");
    MeasureList ms;
    ms.push_back(PiecewiseConstantMeasure::from_segments(
        Geometry::Cake, {{Rational(0), Rational(1, 2L * n), Rational(2)},
                         {Rational(1, n), Rational(1), Rational(1)}}));
    for (int i = 1; i < n; ++i)
        ms.push_back(PiecewiseConstantMeasure::uniform(Geometry::Cake));
    return ms;
}

ConnectedDivision dominating_division(int n) {
    if (n < 2)
        raise(ErrorKind::Precondition, "dominating division needs at least 2 players");
    const Rational half(1, 2L * n);
    const Rational width = (Rational(1) - half) / Rational(n - 1);
    std::vector<Rational> cuts;
    for (int j = 0; j < n - 1; ++j)
        cuts.push_back(half + Rational(j) * width);
    std::vector<int> assignment(n);
    for (int i = 0; i < n; ++i)
        assignment[i] = i;
    return ConnectedDivision::cake(std::move(cuts), std::move(assignment));
}

namespace {

// Prefix integrals of one measure in double precision; cum values come from
// exact integrals so grid and off-grid evaluations agree.
struct DoubleCdf {
    std::vector<double> bp;
    std::vector<double> cum;
    std::vector<double> val;

    double at(double x) const {
        if (x <= 0.0)
            return 0.0;
        if (x >= 1.0)
            return cum.back();
        auto it = std::upper_bound(bp.begin(), bp.end(), x);
        std::size_t c = static_cast<std::size_t>(it - bp.begin()) - 1;
        return cum[c] + (x - bp[c]) * val[c];
    }
};

DoubleCdf make_cdf(const PiecewiseConstantMeasure& m) {
    DoubleCdf t;
    const auto& bp = m.breakpoints();
    const auto& vals = m.values();
    for (const auto& b : bp)
        t.bp.push_back(b.to_double());
    t.cum.assign(bp.size(), 0.0);
    t.val.assign(vals.size(), 0.0);
    Rational acc;
    for (std::size_t c = 0; c < vals.size(); ++c) {
        t.val[c] = vals[c].to_double();
        acc += vals[c] * (bp[c + 1] - bp[c]);
        t.cum[c + 1] = acc.to_double();
    }
    return t;
}

// Mean of the k-1 largest entries of the row other than the diagonal one.
// sorted_desc holds the whole row; exactly one copy of diag is skipped.
double top_avg(const std::vector<double>& sorted_desc, double diag, int km1) {
    double sum = 0.0;
    int taken = 0;
    bool skipped = false;
    for (double v : sorted_desc) {
        if (!skipped && v == diag) {
            skipped = true;
            continue;
        }
        sum += v;
        if (++taken == km1)
            break;
    }
    return sum / km1;
}

struct ClassSpec {
    int p0;
    int p1;
};

// Players 2..n-1 share one measure, so an assignment only matters through the
// pieces of players 0 and 1; the rest fill in by piece order.
std::vector<ClassSpec> pie_classes(int n) {
    std::vector<ClassSpec> cs;
    for (int p0 = 0; p0 < n; ++p0)
        for (int p1 = 0; p1 < n; ++p1)
            if (p1 != p0)
                cs.push_back({p0, p1});
    return cs;
}

std::vector<int> class_assignment(int n, int p0, int p1) {
    std::vector<int> a(n, -1);
    a[p0] = 0;
    a[p1] = 1;
    int next = 2;
    for (int q = 0; q < n; ++q)
        if (a[q] < 0)
            a[q] = next++;
    return a;
}

// Closed intersection of the arc [s,e] (e may pass den on the wrap) with
// [a,b], all in units of 1/den.
bool arc_meets(long long s, long long e, long long a, long long b, long long den) {
    return std::max(s, a) <= std::min(e, b) || std::max(s, a + den) <= std::min(e, b + den);
}

// True when every uniform player's arc meets both special arcs. An arc
// meeting both must contain one of the two gaps between them, and disjoint
// arcs cannot share a gap, so with three or more uniform players a genuine
// partition can never trip this. Counted, not trusted.
bool structure_violated(const std::vector<long long>& nums, long long den, int p0, int p1) {
    const int n = static_cast<int>(nums.size());
    const long long a_hi = den / 6;
    const long long b_lo = den / 2;
    const long long b_hi = 2 * den / 3;
    for (int q = 0; q < n; ++q) {
        if (q == p0 || q == p1)
            continue;
        long long s = nums[q];
        long long e = (q + 1 < n) ? nums[q + 1] : nums[0] + den;
        if (!arc_meets(s, e, 0, a_hi, den) || !arc_meets(s, e, b_lo, b_hi, den))
            return false;
    }
    return true;
}

// Violation scoring against the three distinct rows of the pie family:
// rows 0 and 1 are the special players, row 2 everyone else.
class PieEval {
  public:
    PieEval(int n, int k) : n_(n), k_(k) {
        for (auto& p : P_)
            p.resize(n);
        for (auto& s : S_)
            s.resize(n);
        f_.resize(n);
        uasc_.resize(n);
    }

    void load_grid(const std::array<std::vector<double>, 3>& tab, const std::vector<int>& c) {
        for (int t = 0; t < 3; ++t) {
            auto& p = P_[t];
            for (int j = 0; j + 1 < n_; ++j)
                p[j] = tab[t][c[j + 1]] - tab[t][c[j]];
            p[n_ - 1] = 1.0 - tab[t][c[n_ - 1]] + tab[t][c[0]];
        }
        finish();
    }

    void load_points(const std::array<DoubleCdf, 3>& cdfs, const std::vector<long long>& nums,
                     long long den) {
        for (int t = 0; t < 3; ++t) {
            auto& p = P_[t];
            for (int j = 0; j < n_; ++j)
                f_[j] = cdfs[t].at(static_cast<double>(nums[j]) / static_cast<double>(den));
            for (int j = 0; j + 1 < n_; ++j)
                p[j] = f_[j + 1] - f_[j];
            p[n_ - 1] = 1.0 - f_[n_ - 1] + f_[0];
        }
        finish();
    }

    double score(int p0, int p1) const {
        const double d0 = P_[0][p0];
        const double d1 = P_[1][p1];
        int lo = -1, hi = -1;
        for (int t = 0; t < n_ && lo < 0; ++t)
            if (uasc_[t] != p0 && uasc_[t] != p1)
                lo = uasc_[t];
        for (int t = n_ - 1; t >= 0 && hi < 0; --t)
            if (uasc_[t] != p0 && uasc_[t] != p1)
                hi = uasc_[t];
        const double umin = P_[2][lo];
        const double umax = P_[2][hi];
        // The uniform row's slack grows with its diagonal, so the smallest
        // uniform diagonal is the binding one.
        const double slack =
            std::min({d0 - top_avg(S_[0], d0, k_ - 1), d1 - top_avg(S_[1], d1, k_ - 1),
                      umin - top_avg(S_[2], umin, k_ - 1)});
        const double spread = std::max({d0, d1, umax}) - std::min({d0, d1, umin});
        return (slack < 0.0 ? -slack : 0.0) + spread;
    }

  private:
    void finish() {
        for (int t = 0; t < 3; ++t) {
            S_[t] = P_[t];
            std::sort(S_[t].begin(), S_[t].end(), std::greater<>());
        }
        for (int q = 0; q < n_; ++q)
            uasc_[q] = q;
        std::sort(uasc_.begin(), uasc_.end(), [&](int a, int b) {
            if (P_[2][a] != P_[2][b])
                return P_[2][a] < P_[2][b];
            return a < b;
        });
    }

    int n_;
    int k_;
    std::array<std::vector<double>, 3> P_;
    std::array<std::vector<double>, 3> S_;
    std::vector<double> f_;
    std::vector<int> uasc_;
};

constexpr double kNearFeasible = 0.05;

}  // namespace

double violation_score_pie(const std::vector<double>& cuts, const std::vector<int>& assignment,
                           std::span<const PiecewiseConstantMeasure> ms, int k) {
    const int n = static_cast<int>(ms.size());
    if (n < 2)
        raise(ErrorKind::InvalidArgument, "need at least 2 measures");
    if (k < 2 || k > n)
        raise(ErrorKind::InvalidArgument, "k must lie in [2, n], got " + std::to_string(k));
    if (static_cast<int>(cuts.size()) != n || static_cast<int>(assignment.size()) != n)
        raise(ErrorKind::Validation, "expected n cuts and n assigned pieces");
    for (int j = 0; j + 1 < n; ++j)
        if (cuts[j] > cuts[j + 1])
            raise(ErrorKind::Validation, "cuts must be sorted");
    if (cuts.front() < 0.0 || cuts.back() >= 1.0)
        raise(ErrorKind::Validation, "cuts must lie in [0,1)");
    std::vector<char> seen(n, 0);
    for (int p : assignment) {
        if (p < 0 || p >= n || seen[p])
            raise(ErrorKind::Validation, "assignment must be a permutation of the players");
        seen[p] = 1;
    }
    for (const auto& m : ms)
        if (m.geometry() != Geometry::Pie)
            raise(ErrorKind::GeometryMismatch, "violation score is defined on the pie");

    std::vector<int> piece_of(n);
    for (int q = 0; q < n; ++q)
        piece_of[assignment[q]] = q;

    double worst_slack = std::numeric_limits<double>::infinity();
    double dmin = std::numeric_limits<double>::infinity();
    double dmax = -std::numeric_limits<double>::infinity();
    std::vector<double> row(n), sorted(n);
    for (int i = 0; i < n; ++i) {
        const DoubleCdf cdf = make_cdf(ms[i]);
        for (int j = 0; j + 1 < n; ++j)
            row[j] = cdf.at(cuts[j + 1]) - cdf.at(cuts[j]);
        row[n - 1] = 1.0 - cdf.at(cuts[n - 1]) + cdf.at(cuts[0]);
        sorted = row;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        const double diag = row[piece_of[i]];
        worst_slack = std::min(worst_slack, diag - top_avg(sorted, diag, k - 1));
        dmin = std::min(dmin, diag);
        dmax = std::max(dmax, diag);
    }
    return (worst_slack < 0.0 ? -worst_slack : 0.0) + (dmax - dmin);
}

Rational violation_score_pie_exact(const ConnectedDivision& d,
                                   std::span<const PiecewiseConstantMeasure> ms, int k) {
    if (d.geometry() != Geometry::Pie)
        raise(ErrorKind::GeometryMismatch, "violation score is defined on the pie");
    SharingMatrix m = sharing_matrix(d, ms);
    Verdict prop = is_k_proportional(m, k);
    Verdict eq = is_equitable(m);
    Rational v;
    if (prop.witness && prop.witness->slack < Rational(0))
        v -= prop.witness->slack;
    if (eq.witness)
        v -= eq.witness->slack;  // equitability slack is min diag - max diag <= 0
    return v;
}

SearchCertificate certify_pie_impossibility(const PieSearchOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    MeasureList ms = pie_counterexample(opt.n);
    const int n = opt.n;
    const int g = opt.grid;
    const int k = opt.k == 0 ? n - 1 : opt.k;
    if (k < 2 || k > n)
        raise(ErrorKind::Validation, "k must lie in [2, n]");
    if (g < 12 || g % 6 != 0)
        raise(ErrorKind::Validation,
              "grid must be a multiple of 6 and at least 12, so each special arc carries at "
              "least 3 grid points and its endpoints are grid points");
    if (opt.refine_rounds < 0 || opt.refine_rounds > 24)
        raise(ErrorKind::Validation, "refine rounds must lie in [0, 24]");
    const int nthreads = std::max(1, opt.threads);

    std::array<std::vector<double>, 3> tab;
    for (int t = 0; t < 3; ++t) {
        tab[t].resize(g + 1);
        for (int idx = 0; idx <= g; ++idx)
            tab[t][idx] = ms[t].integral(Rational(0), Rational(idx, g)).to_double();
    }
    const std::vector<ClassSpec> classes = pie_classes(n);
    const int nc = static_cast<int>(classes.size());

    struct Block {
        std::vector<double> v;
        std::vector<std::vector<long long>> cuts;
        long long examined = 0;
        long near = 0;
        long sviol = 0;
    };
    std::vector<Block> blocks(g);
    std::atomic<int> next{0};

    auto worker = [&] {
        PieEval ev(n, k);
        std::vector<long long> scratch;
        for (;;) {
            const int c0 = next.fetch_add(1);
            if (c0 >= g)
                return;
            Block& blk = blocks[c0];
            blk.v.assign(nc, std::numeric_limits<double>::infinity());
            blk.cuts.assign(nc, {});
            std::vector<int> c(n, c0);
            for (;;) {
                ev.load_grid(tab, c);
                for (int ci = 0; ci < nc; ++ci) {
                    const double v = ev.score(classes[ci].p0, classes[ci].p1);
                    if (v < blk.v[ci]) {
                        blk.v[ci] = v;
                        blk.cuts[ci].assign(c.begin(), c.end());
                    }
                    if (v < kNearFeasible) {
                        ++blk.near;
                        scratch.assign(c.begin(), c.end());
                        if (structure_violated(scratch, g, classes[ci].p0, classes[ci].p1))
                            ++blk.sviol;
                    }
                }
                blk.examined += nc;
                int pos = n - 1;
                while (pos >= 1 && c[pos] == g - 1)
                    --pos;
                if (pos == 0)
                    break;
                ++c[pos];
                for (int q = pos + 1; q < n; ++q)
                    c[q] = c[pos];
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();

    // Blocks merge in first-cut order; within a block the scan is already
    // lexicographic, so strict < keeps the lexicographically smallest winner.
    std::vector<double> bestv(nc, std::numeric_limits<double>::infinity());
    std::vector<std::vector<long long>> bestc(nc);
    long long examined = 0;
    long near = 0;
    long sviol = 0;
    for (int c0 = 0; c0 < g; ++c0) {
        const Block& blk = blocks[c0];
        examined += blk.examined;
        near += blk.near;
        sviol += blk.sviol;
        for (int ci = 0; ci < nc; ++ci) {
            if (blk.v[ci] < bestv[ci]) {
                bestv[ci] = blk.v[ci];
                bestc[ci] = blk.cuts[ci];
            }
        }
    }

    // Coordinate descent per class with steps h, h/2, ..., assignment fixed.
    const std::array<DoubleCdf, 3> cdfs = {make_cdf(ms[0]), make_cdf(ms[1]), make_cdf(ms[2])};
    PieEval ev(n, k);
    long long den = g;
    std::vector<std::vector<long long>> rnums(nc);
    for (int ci = 0; ci < nc; ++ci)
        rnums[ci] = bestc[ci];
    std::vector<double> rv = bestv;
    for (int round = 0; round < opt.refine_rounds; ++round) {
        if (round > 0) {
            den *= 2;
            for (auto& nums : rnums)
                for (auto& x : nums)
                    x *= 2;
        }
        for (int ci = 0; ci < nc; ++ci) {
            bool improved = true;
            int sweeps = 0;
            while (improved && ++sweeps <= 64) {
                improved = false;
                for (int j = 0; j < n; ++j) {
                    for (int dlt : {-1, +1}) {
                        std::vector<long long> cand = rnums[ci];
                        cand[j] += dlt;
                        if (cand[j] < 0 || cand[j] >= den)
                            continue;
                        if (j > 0 && cand[j - 1] > cand[j])
                            continue;
                        if (j + 1 < n && cand[j] > cand[j + 1])
                            continue;
                        ev.load_points(cdfs, cand, den);
                        const double v = ev.score(classes[ci].p0, classes[ci].p1);
                        ++examined;
                        if (v < kNearFeasible) {
                            ++near;
                            if (structure_violated(cand, den, classes[ci].p0, classes[ci].p1))
                                ++sviol;
                        }
                        if (v + 1e-15 < rv[ci]) {
                            rv[ci] = v;
                            rnums[ci] = std::move(cand);
                            improved = true;
                            break;
                        }
                    }
                }
            }
        }
    }

    int best = 0;
    for (int ci = 1; ci < nc; ++ci)
        if (rv[ci] < rv[best] || (rv[ci] == rv[best] && rnums[ci] < rnums[best]))
            best = ci;

    std::vector<Rational> cuts;
    for (long long x : rnums[best])
        cuts.push_back(Rational(static_cast<long>(x), static_cast<long>(den)));
    ConnectedDivision division = ConnectedDivision::pie(
        std::move(cuts), class_assignment(n, classes[best].p0, classes[best].p1));
    const Rational exact = violation_score_pie_exact(division, ms, k);

    SearchCertificate cert;
    cert.theorem = "pie-equitable-kprop";
    cert.n = n;
    cert.k = k;
    cert.grid_step = Rational(1, g);
    cert.refine_rounds = opt.refine_rounds;
    cert.best_violation = rv[best];
    cert.exact_violation = exact;
    cert.best_division = std::move(division);
    cert.assignment_classes = nc;
    cert.divisions_examined = examined;
    cert.structure_violations = sviol;
    cert.near_feasible_seen = near;
    cert.bar_met = exact > Rational(1, 1000000);
    cert.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

SearchCertificate certify_cake_pareto(const CakeSearchOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    const int n = opt.n;
    if (n < 3)
        raise(ErrorKind::Precondition,
              "pareto certification tests (n-1)-proportionality, so it needs n >= 3");
    const int g = opt.grid;
    if (g < 2 * n || g % (2 * n) != 0)
        raise(ErrorKind::Validation,
              "grid must be a positive multiple of 2n so the density breakpoints are grid points");
    const int nthreads = std::max(1, opt.threads);
    MeasureList ms = cake_counterexample(n);

    std::vector<Rational> pre(g + 1);
    for (int idx = 0; idx <= g; ++idx)
        pre[idx] = ms[0].integral(Rational(0), Rational(idx, g));
    Rational maxdens(0);
    for (const auto& m : ms)
        maxdens = std::max(maxdens, m.max_density());
    const Rational tol = maxdens / Rational(g);
    const Rational one(1);
    const Rational nth(1, n);
    const Rational nm1(n - 1);
    const SharingMatrix dominating = sharing_matrix(dominating_division(n), ms);

    struct Block {
        long long cutvecs = 0;
        long long classes_pass = 0;
        long diagfail = 0;
        long domfail = 0;
        std::vector<long long> repcuts;
        int repd0 = -1;
    };
    std::vector<Block> blocks(g + 1);
    std::atomic<int> next{0};

    struct MinPair {
        int arg = 0;     // index of the smallest entry, leftmost on ties
        Rational lo1;    // that entry
        Rational lo2;    // smallest among the rest
    };
    auto scan_min = [](const std::vector<Rational>& v) {
        MinPair mp;
        const int m = static_cast<int>(v.size());
        for (int q = 1; q < m; ++q)
            if (v[q] < v[mp.arg])
                mp.arg = q;
        mp.lo1 = v[mp.arg];
        bool first = true;
        for (int q = 0; q < m; ++q) {
            if (q == mp.arg)
                continue;
            if (first || v[q] < mp.lo2) {
                mp.lo2 = v[q];
                first = false;
            }
        }
        return mp;
    };
    auto min_excl = [](const MinPair& mp, int p) { return mp.arg == p ? mp.lo2 : mp.lo1; };

    // Row with diagonal d passes (n-1)-proportionality iff
    // (n-1) * d + (smallest entry off the diagonal) >= 1.
    auto worker = [&] {
        std::vector<Rational> p0(n), pu(n);
        std::vector<char> ok0(n), oku(n);
        for (;;) {
            const int x1 = next.fetch_add(1);
            if (x1 > g)
                return;
            Block& blk = blocks[x1];
            std::vector<int> x(n - 1, x1);
            for (;;) {
                ++blk.cutvecs;
                for (int p = 0; p < n; ++p) {
                    const int lo = p == 0 ? 0 : x[p - 1];
                    const int hi = p == n - 1 ? g : x[p];
                    p0[p] = pre[hi] - pre[lo];
                    pu[p] = Rational(hi - lo, g);
                }
                const MinPair m0 = scan_min(p0);
                const MinPair mu = scan_min(pu);
                int cnt_u = 0;
                for (int p = 0; p < n; ++p) {
                    ok0[p] = nm1 * p0[p] + min_excl(m0, p) >= one;
                    oku[p] = nm1 * pu[p] + min_excl(mu, p) >= one;
                    cnt_u += oku[p] ? 1 : 0;
                }
                for (int d0 = 0; d0 < n; ++d0) {
                    if (!ok0[d0] || !(cnt_u == n || (cnt_u == n - 1 && !oku[d0])))
                        continue;
                    ++blk.classes_pass;
                    if (blk.repd0 < 0) {
                        blk.repcuts.assign(x.begin(), x.end());
                        blk.repd0 = d0;
                    }
                    bool diag_ok = abs(p0[d0] - nth) <= tol;
                    for (int q = 0; diag_ok && q < n; ++q)
                        if (q != d0)
                            diag_ok = abs(pu[q] - nth) <= tol;
                    if (!diag_ok)
                        ++blk.diagfail;
                    std::vector<Rational> cuts;
                    for (int j = 0; j + 1 < n; ++j)
                        cuts.push_back(Rational(x[j], g));
                    std::vector<int> asg(n);
                    asg[d0] = 0;
                    int nextp = 1;
                    for (int q = 0; q < n; ++q)
                        if (q != d0)
                            asg[q] = nextp++;
                    ConnectedDivision cand =
                        ConnectedDivision::cake(std::move(cuts), std::move(asg));
                    if (!pareto_dominates(dominating, sharing_matrix(cand, ms)))
                        ++blk.domfail;
                }
                int pos = n - 2;
                while (pos >= 1 && x[pos] == g)
                    --pos;
                if (pos == 0)
                    break;
                ++x[pos];
                for (int q = pos + 1; q < n - 1; ++q)
                    x[q] = x[pos];
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();

    long long cutvecs = 0;
    long long passes = 0;
    long diagfail = 0;
    long domfail = 0;
    std::vector<long long> repcuts;
    int repd0 = -1;
    for (int x1 = 0; x1 <= g; ++x1) {
        const Block& blk = blocks[x1];
        cutvecs += blk.cutvecs;
        passes += blk.classes_pass;
        diagfail += blk.diagfail;
        domfail += blk.domfail;
        if (repd0 < 0 && blk.repd0 >= 0) {
            repcuts = blk.repcuts;
            repd0 = blk.repd0;
        }
    }
    long long fact = 1;
    for (int i = 2; i <= n - 1; ++i)
        fact *= i;

    SearchCertificate cert;
    cert.theorem = "cake-pareto";
    cert.n = n;
    cert.k = n - 1;
    cert.grid_step = Rational(1, g);
    cert.refine_rounds = 0;
    cert.best_violation = 0.0;
    cert.assignment_classes = n;
    cert.divisions_examined = cutvecs * n * fact;
    cert.kprop_divisions_found = passes * fact;
    cert.diagonal_failures = diagfail;
    cert.domination_failures = domfail;
    if (repd0 >= 0) {
        std::vector<Rational> cuts;
        for (long long x : repcuts)
            cuts.push_back(Rational(static_cast<long>(x), g));
        std::vector<int> asg(n);
        asg[repd0] = 0;
        int nextp = 1;
        for (int q = 0; q < n; ++q)
            if (q != repd0)
                asg[q] = nextp++;
        cert.best_division = ConnectedDivision::cake(std::move(cuts), std::move(asg));
    }
    cert.bar_met = cert.kprop_divisions_found > 0 && diagfail == 0 && domfail == 0;
    cert.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

}  // namespace fairdiv
