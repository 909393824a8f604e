#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divisions.hpp"
#include "rational.hpp"

namespace fairdiv {

// The extremal instance of a notion's defining inequality. `others` is the
// defining subset: the envied player for envy-freeness, the comparison player
// for equitability, the entry column for exactness, the k-1 comparison
// players (excluding `player`) for k-proportionality, and the full subset S
// (including `player`) for the complement bounds. Plugging the witness back
// into the defining inequality reproduces `slack` exactly; the notion holds
// iff the worst slack is >= 0 (> 0 for strict variants).
struct Witness {
    int player = 0;
    std::vector<int> others;
    Rational slack;
};

struct Verdict {
    bool holds = false;
    // Absent only for vacuous verdicts (no instance to check, e.g. envy at n=1).
    std::optional<Witness> witness;
};

// mu_i(X_i) >= 1/n for all i; strict for the strong variant.
Verdict is_proportional(const SharingMatrix& m);
Verdict is_strong_proportional(const SharingMatrix& m);

// mu_i(X_i) >= mu_i(X_j) for all i != j; strict for the strong variant.
Verdict is_envy_free(const SharingMatrix& m);
Verdict is_strong_envy_free(const SharingMatrix& m);

// All diagonal entries equal. Slack = min diagonal - max diagonal.
Verdict is_equitable(const SharingMatrix& m);

// Every entry equals 1/n. Slack = -(largest absolute deviation).
Verdict is_exact(const SharingMatrix& m);

// For every size-k subset J and every i in J:
//   mu_i(X_i) >= (sum_{j in J} mu_i(X_j)) / k      (strict for strong)
// Decided via the equivalent per-row criterion: compare mu_i(X_i) against the
// average of the k-1 largest off-diagonal entries of row i. 2 <= k <= n.
Verdict is_k_proportional(const SharingMatrix& m, int k);
Verdict is_strong_k_proportional(const SharingMatrix& m, int k);

// True iff diag(a) >= diag(b) coordinatewise with at least one strict entry.
bool pareto_dominates(const SharingMatrix& a, const SharingMatrix& b);

// Complement bounds: for every nonempty subset S with |S| <= k and every
// i in S, the outside mass sum_{j not in S} mu_i(X_j) is at most
// (n-|S|)/(n-|S|+1) (harmonic) resp. (n-|S|)/n (linear). 1 <= k <= n.
// Subset enumeration is exponential; n <= 16.
Verdict is_chb(const SharingMatrix& m, int k);
Verdict is_clb(const SharingMatrix& m, int k);

// Everything at once. k_proportional[k-2] holds the k-proportional verdict
// for k in 2..n, likewise strong_k_proportional; chb[k-1] and clb[k-1] cover
// k in 1..n and stay empty when n > 16.
struct FairnessReport {
    struct Entry {
        std::string notion;
        bool holds = false;
        std::optional<Witness> witness;
    };
    int players = 0;
    std::vector<Entry> notions;
    std::vector<bool> k_proportional;
    std::vector<bool> strong_k_proportional;
    std::vector<bool> chb;
    std::vector<bool> clb;
};

FairnessReport analyze(const SharingMatrix& m);

} // namespace fairdiv
