#include "fairness.hpp"

#include <algorithm>

#include "errors.hpp"

namespace fairdiv {

namespace {

const Rational kZero = 0;
const Rational kOne = 1;

int n_of(const SharingMatrix& m) { return static_cast<int>(m.size()); }

// Worst witness = smallest slack, ties by player then by subset.
bool witness_less(const Witness& a, const Witness& b) {
    if (a.slack != b.slack) return a.slack < b.slack;
    if (a.player != b.player) return a.player < b.player;
    return a.others < b.others;
}

void keep_worst(std::optional<Witness>& best, Witness cand) {
    if (!best || witness_less(cand, *best)) best = std::move(cand);
}

Verdict settle(std::optional<Witness> worst, bool strict) {
    Verdict v;
    v.holds = !worst || (strict ? worst->slack > kZero : worst->slack >= kZero);
    v.witness = std::move(worst);
    return v;
}

Verdict proportional_impl(const SharingMatrix& m, bool strict) {
    int n = n_of(m);
    Rational target(1, n);
    std::optional<Witness> worst;
    for (int i = 0; i < n; ++i) {
        keep_worst(worst, Witness{i, {}, m.at(i, i) - target});
    }
    return settle(std::move(worst), strict);
}

Verdict envy_impl(const SharingMatrix& m, bool strict) {
    int n = n_of(m);
    std::optional<Witness> worst;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            keep_worst(worst, Witness{i, {j}, m.at(i, i) - m.at(i, j)});
        }
    }
    return settle(std::move(worst), strict);
}

Verdict kprop_impl(const SharingMatrix& m, int k, bool strict) {
    int n = n_of(m);
    if (k < 2 || k > n) {
        raise(ErrorKind::InvalidArgument,
              "k must lie in [2, " + std::to_string(n) + "], got " + std::to_string(k));
    }
    std::optional<Witness> worst;
    for (int i = 0; i < n; ++i) {
        std::vector<int> order;
        order.reserve(n - 1);
        for (int j = 0; j < n; ++j) {
            if (j != i) order.push_back(j);
        }
        // Largest off-diagonal entries first; index order breaks value ties so
        // the reported subset is the lexicographically smallest worst one.
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (m.at(i, a) != m.at(i, b)) return m.at(i, b) < m.at(i, a);
            return a < b;
        });
        order.resize(k - 1);
        Rational sum;
        for (int j : order) sum += m.at(i, j);
        std::sort(order.begin(), order.end());
        keep_worst(worst, Witness{i, std::move(order), m.at(i, i) - sum / Rational(k - 1)});
    }
    return settle(std::move(worst), strict);
}

struct BoundScan {
    // Worst witness per subset size, for each bound family. Index = |S|.
    std::vector<std::optional<Witness>> harmonic;
    std::vector<std::optional<Witness>> linear;
};

BoundScan scan_subsets(const SharingMatrix& m) {
    int n = n_of(m);
    if (n > 16) {
        raise(ErrorKind::Limit, "complement-bound check enumerates all subsets; supported for "
                                "n <= 16, got n = " +
                                    std::to_string(n));
    }
    BoundScan out;
    out.harmonic.resize(n + 1);
    out.linear.resize(n + 1);
    std::vector<int> members;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        members.clear();
        for (int j = 0; j < n; ++j) {
            if (mask >> j & 1u) members.push_back(j);
        }
        int s = static_cast<int>(members.size());
        Rational harmonic_bound(n - s, n - s + 1);
        Rational linear_bound(n - s, n);
        for (int i : members) {
            Rational inside;
            for (int j : members) inside += m.at(i, j);
            Rational outside = kOne - inside;
            keep_worst(out.harmonic[s], Witness{i, members, harmonic_bound - outside});
            keep_worst(out.linear[s], Witness{i, members, linear_bound - outside});
        }
    }
    return out;
}

Verdict bound_impl(const SharingMatrix& m, int k, bool harmonic) {
    int n = n_of(m);
    if (k < 1 || k > n) {
        raise(ErrorKind::InvalidArgument,
              "k must lie in [1, " + std::to_string(n) + "], got " + std::to_string(k));
    }
    BoundScan scan = scan_subsets(m);
    const auto& per_size = harmonic ? scan.harmonic : scan.linear;
    std::optional<Witness> worst;
    for (int s = 1; s <= k; ++s) {
        if (per_size[s]) keep_worst(worst, *per_size[s]);
    }
    return settle(std::move(worst), false);
}

} // namespace

Verdict is_proportional(const SharingMatrix& m) { return proportional_impl(m, false); }
Verdict is_strong_proportional(const SharingMatrix& m) { return proportional_impl(m, true); }
Verdict is_envy_free(const SharingMatrix& m) { return envy_impl(m, false); }
Verdict is_strong_envy_free(const SharingMatrix& m) { return envy_impl(m, true); }

Verdict is_equitable(const SharingMatrix& m) {
    int n = n_of(m);
    int imin = 0;
    int imax = 0;
    for (int i = 1; i < n; ++i) {
        if (m.at(i, i) < m.at(imin, imin)) imin = i;
        if (m.at(imax, imax) < m.at(i, i)) imax = i;
    }
    Witness w{imin, {imax}, m.at(imin, imin) - m.at(imax, imax)};
    return settle(w, false);
}

Verdict is_exact(const SharingMatrix& m) {
    int n = n_of(m);
    Rational target(1, n);
    std::optional<Witness> worst;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            keep_worst(worst, Witness{i, {j}, -abs(m.at(i, j) - target)});
        }
    }
    return settle(std::move(worst), false);
}

Verdict is_k_proportional(const SharingMatrix& m, int k) { return kprop_impl(m, k, false); }
Verdict is_strong_k_proportional(const SharingMatrix& m, int k) { return kprop_impl(m, k, true); }

bool pareto_dominates(const SharingMatrix& a, const SharingMatrix& b) {
    if (a.size() != b.size()) {
        raise(ErrorKind::InvalidArgument, "sharing matrices of different sizes");
    }
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.at(i, i) < b.at(i, i)) return false;
        if (b.at(i, i) < a.at(i, i)) strict = true;
    }
    return strict;
}

Verdict is_chb(const SharingMatrix& m, int k) { return bound_impl(m, k, true); }
Verdict is_clb(const SharingMatrix& m, int k) { return bound_impl(m, k, false); }

FairnessReport analyze(const SharingMatrix& m) {
    FairnessReport r;
    int n = n_of(m);
    r.players = n;
    auto add = [&](const char* name, Verdict v) {
        r.notions.push_back({name, v.holds, std::move(v.witness)});
    };
    add("proportional", is_proportional(m));
    add("strong_proportional", is_strong_proportional(m));
    add("envy_free", is_envy_free(m));
    add("strong_envy_free", is_strong_envy_free(m));
    add("equitable", is_equitable(m));
    add("exact", is_exact(m));
    for (int k = 2; k <= n; ++k) {
        r.k_proportional.push_back(is_k_proportional(m, k).holds);
        r.strong_k_proportional.push_back(is_strong_k_proportional(m, k).holds);
    }
    if (n <= 16) {
        BoundScan scan = scan_subsets(m);
        bool harmonic_ok = true;
        bool linear_ok = true;
        for (int s = 1; s <= n; ++s) {
            if (scan.harmonic[s] && scan.harmonic[s]->slack < kZero) harmonic_ok = false;
            if (scan.linear[s] && scan.linear[s]->slack < kZero) linear_ok = false;
            r.chb.push_back(harmonic_ok);
            r.clb.push_back(linear_ok);
        }
    }
    return r;
}

} // namespace fairdiv
