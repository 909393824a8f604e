#include "simplex.hpp"

#include "errors.hpp"

namespace fairdiv {

namespace {

const Rational kZero = 0;

void pivot(std::vector<std::vector<Rational>>& t, std::vector<Rational>& reduced,
           std::vector<int>& basis, std::size_t row, std::size_t col) {
    Rational p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i == row || t[i][col].is_zero()) continue;
        Rational f = t[i][col];
        for (std::size_t j = 0; j < t[i].size(); ++j) t[i][j] -= f * t[row][j];
    }
    if (!reduced[col].is_zero()) {
        Rational f = reduced[col];
        for (std::size_t j = 0; j < reduced.size(); ++j) reduced[j] -= f * t[row][j];
    }
    basis[row] = static_cast<int>(col);
}

} // namespace

std::optional<std::vector<Rational>> solve_feasible(const LinearSystem& sys) {
    const std::size_t m = sys.a.size();
    if (m == 0 || sys.b.size() != m) {
        raise(ErrorKind::InvalidArgument, "malformed linear system");
    }
    const std::size_t n = sys.a[0].size();
    for (const auto& row : sys.a) {
        if (row.size() != n) raise(ErrorKind::InvalidArgument, "ragged linear system");
    }

    const std::size_t total = n + m; // original variables then one artificial per row
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(total + 1));
    std::vector<int> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool neg = sys.b[i] < kZero;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = neg ? -sys.a[i][j] : sys.a[i][j];
        t[i][n + i] = 1;
        t[i][total] = neg ? -sys.b[i] : sys.b[i];
        basis[i] = static_cast<int>(n + i);
    }

    // Minimize the artificial mass; reduced[j] = cost[j] - sum of column j.
    std::vector<Rational> reduced(total);
    for (std::size_t j = 0; j < total; ++j) {
        Rational colsum;
        for (std::size_t i = 0; i < m; ++i) colsum += t[i][j];
        reduced[j] = (j < n ? kZero : Rational(1)) - colsum;
    }

    while (true) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j) {
            if (reduced[j] < kZero) {
                enter = j;
                break;
            }
        }
        if (enter == total) break;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (!(t[i][enter] > kZero)) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            // ratio test by cross-multiplication; both pivots are positive
            Rational lhs = t[i][total] * t[leave][enter];
            Rational rhs = t[leave][total] * t[i][enter];
            if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) {
            raise(ErrorKind::Internal, "phase-1 objective unbounded"); // cannot happen
        }
        pivot(t, reduced, basis, leave, enter);
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= static_cast<int>(n) && !t[i][total].is_zero()) return std::nullopt;
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < static_cast<int>(n)) x[basis[i]] = t[i][total];
    }
    return x;
}

} // namespace fairdiv
