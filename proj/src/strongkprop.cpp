#include "strongkprop.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"
#include "fairness.hpp"
#include "simplex.hpp"

namespace fairdiv {

namespace {

const Rational kZero = 0;
const Rational kOne = 1;

GeneralDivision division_from_cell_fractions(Geometry g, const std::vector<Interval>& cells,
                                             const std::vector<std::vector<Rational>>& frac) {
    int n = static_cast<int>(frac.front().size());
    std::vector<std::vector<Interval>> shares(n);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        Rational acc = cells[c].start();
        Rational len = cells[c].length();
        for (int j = 0; j < n; ++j) {
            Rational w = frac[c][j] * len;
            if (w.is_zero()) continue;
            shares[j].push_back(Interval::make(g, acc, acc + w));
            acc += w;
        }
    }
    return GeneralDivision::make(g, std::move(shares));
}

} // namespace

std::vector<std::vector<Rational>> dependency_nullspace(
    std::span<const PiecewiseConstantMeasure> ms) {
    auto ref = common_refinement(ms);
    std::size_t n = ms.size();
    std::size_t rows = ref.cells.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(n));
    for (std::size_t c = 0; c < rows; ++c) {
        for (std::size_t i = 0; i < n; ++i) a[c][i] = ref.densities[i][c];
    }

    // Reduced row echelon form; free columns span the nullspace.
    std::vector<int> pivot_row_of_col(n, -1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows; ++col) {
        std::size_t pr = r;
        while (pr < rows && a[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        Rational inv = a[r][col];
        for (auto& v : a[r]) v /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_row_of_col[col] = static_cast<int>(r);
        ++r;
    }

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (pivot_row_of_col[f] >= 0) continue;
        std::vector<Rational> lambda(n);
        lambda[f] = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (pivot_row_of_col[c] >= 0) lambda[c] = -a[pivot_row_of_col[c]][f];
        }
        basis.push_back(std::move(lambda));
    }
    return basis;
}

EqualityClasses equality_classes(std::span<const PiecewiseConstantMeasure> ms) {
    EqualityClasses out;
    for (int i = 0; i < static_cast<int>(ms.size()); ++i) {
        bool placed = false;
        for (auto& cls : out.classes) {
            if (measures_equal(ms[i], ms[cls.front()])) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) out.classes.push_back({i});
    }
    for (const auto& cls : out.classes) {
        out.max_size = std::max(out.max_size, static_cast<int>(cls.size()));
    }
    return out;
}

bool strong_k_exists(std::span<const PiecewiseConstantMeasure> ms, int k) {
    int n = static_cast<int>(ms.size());
    if (k < 2 || k > n) {
        raise(ErrorKind::InvalidArgument,
              "k must lie in [2, " + std::to_string(n) + "], got " + std::to_string(k));
    }
    return equality_classes(ms).max_size <= k - 1;
}

ProperMatrix proper_matrix(std::span<const PiecewiseConstantMeasure> ms) {
    std::size_t n = ms.size();
    if (n < 2) raise(ErrorKind::InvalidArgument, "proper matrix needs at least two measures");
    auto g = gram(ms);

    // D[i][j] = integral of (f_i - f_j)^2 = G[i][i] - 2 G[i][j] + G[j][j]
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            d[i][j] = g[i][i] - g[i][j] - g[i][j] + g[j][j];
        }
    }
    ProperMatrix out;
    out.q.assign(n, std::vector<Rational>(n));
    Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i) {
        Rational ci;
        for (std::size_t j = 0; j < n; ++j) ci += d[i][j] * half;
        ci /= Rational(static_cast<long>(n));
        for (std::size_t j = 0; j < n; ++j) out.q[i][j] = ci - d[i][j] * half;
    }

    // The construction is checked, not trusted.
    for (std::size_t i = 0; i < n; ++i) {
        Rational row;
        for (std::size_t j = 0; j < n; ++j) row += out.q[i][j];
        if (!row.is_zero()) raise(ErrorKind::Internal, "proper matrix row sum " + row.str());
        for (std::size_t j = 0; j < n; ++j) {
            if (out.q[i][j] > out.q[i][i]) {
                raise(ErrorKind::Internal, "proper matrix diagonal not dominant");
            }
            bool tied = out.q[i][j] == out.q[i][i];
            if (tied != measures_equal(ms[i], ms[j])) {
                raise(ErrorKind::Internal, "proper matrix equality pattern mismatch");
            }
        }
    }
    for (const auto& lambda : dependency_nullspace(ms)) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational s;
            for (std::size_t i = 0; i < n; ++i) s += lambda[i] * out.q[i][j];
            if (!s.is_zero()) {
                raise(ErrorKind::Internal, "proper matrix breaks a measure dependency");
            }
        }
    }
    return out;
}

GeneralDivision exact_division(std::span<const PiecewiseConstantMeasure> ms) {
    auto ref = common_refinement(ms);
    std::size_t n = ms.size();
    Rational share(1, static_cast<long>(n));
    std::vector<std::vector<Rational>> frac(ref.cells.size(),
                                            std::vector<Rational>(n, share));
    return division_from_cell_fractions(ms.front().geometry(), ref.cells, frac);
}

std::optional<GeneralDivision> try_realize_sharing_matrix(
    const SharingMatrix& target, std::span<const PiecewiseConstantMeasure> ms) {
    std::size_t n = ms.size();
    if (target.size() != n) {
        raise(ErrorKind::InvalidArgument, "target matrix size does not match the measure count");
    }
    auto ref = common_refinement(ms);
    std::size_t cells = ref.cells.size();

    // Variables lambda[c][j] >= 0: the fraction of cell c handed to player j.
    auto var = [&](std::size_t c, std::size_t j) { return c * n + j; };
    LinearSystem sys;
    std::size_t width = cells * n;
    for (std::size_t c = 0; c < cells; ++c) {
        std::vector<Rational> row(width);
        for (std::size_t j = 0; j < n; ++j) row[var(c, j)] = 1;
        sys.a.push_back(std::move(row));
        sys.b.push_back(kOne);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> row(width);
            for (std::size_t c = 0; c < cells; ++c) row[var(c, j)] = ref.weights[i][c];
            sys.a.push_back(std::move(row));
            sys.b.push_back(target.at(i, j));
        }
    }

    auto x = solve_feasible(sys);
    if (!x) return std::nullopt;

    std::vector<std::vector<Rational>> frac(cells, std::vector<Rational>(n));
    for (std::size_t c = 0; c < cells; ++c) {
        for (std::size_t j = 0; j < n; ++j) frac[c][j] = (*x)[var(c, j)];
    }
    GeneralDivision d =
        division_from_cell_fractions(ms.front().geometry(), ref.cells, frac);
    if (!(sharing_matrix(d, ms) == target)) {
        raise(ErrorKind::Internal, "realized division does not reproduce the target matrix");
    }
    return d;
}

GeneralDivision realize_sharing_matrix(const SharingMatrix& target,
                                       std::span<const PiecewiseConstantMeasure> ms) {
    auto d = try_realize_sharing_matrix(target, ms);
    if (!d) {
        raise(ErrorKind::Infeasible,
              "no division of these measures realizes the target sharing matrix");
    }
    return std::move(*d);
}

StrongKResult strong_k_division(std::span<const PiecewiseConstantMeasure> ms, int k) {
    int n = static_cast<int>(ms.size());
    if (!strong_k_exists(ms, k)) {
        raise(ErrorKind::Precondition,
              "no strong " + std::to_string(k) + "-proportional division exists: some " +
                  std::to_string(k) + " of the measures all coincide");
    }
    ProperMatrix pm = proper_matrix(ms);

    // Largest eps keeping every entry of E + eps*Q inside [0,1].
    Rational inv_n(1, n);
    Rational eps_max;
    bool bounded = false;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational& q = pm.q[i][j];
            if (q.is_zero()) continue;
            Rational cand = q > kZero ? (kOne - inv_n) / q : inv_n / (-q);
            eps_max = bounded ? min(eps_max, cand) : cand;
            bounded = true;
        }
    }
    if (!bounded) raise(ErrorKind::Internal, "zero proper matrix despite distinct measures");

    Rational floor = eps_max / Rational(1073741824L); // eps_max / 2^30
    Rational eps = eps_max;
    while (true) {
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) rows[i][j] = inv_n + eps * pm.q[i][j];
        }
        SharingMatrix target = SharingMatrix::from_rows(std::move(rows));
        if (auto d = try_realize_sharing_matrix(target, ms)) {
            if (!is_strong_k_proportional(target, k).holds) {
                raise(ErrorKind::Internal, "perturbed division fails its own guarantee");
            }
            return {std::move(*d), eps};
        }
        eps /= 2;
        if (eps < floor) {
            raise(ErrorKind::Limit,
                  "no realizable perturbation found down to eps = " + eps.str() +
                      "; giving up (solver limitation, not nonexistence)");
        }
    }
}

} // namespace fairdiv
