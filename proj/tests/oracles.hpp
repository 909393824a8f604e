#pragma once

#include <bit>
#include <vector>

#include "divisions.hpp"
#include "rational.hpp"

namespace fairdiv::testing {

// Reference k-proportionality decisions by explicit subset enumeration,
// cross-checking the per-row shortcut used by the library. n <= 20.

// Inclusive form: for every size-k subset J and every i in J,
// k * M[i][i] >= sum over J of row i.
inline bool kprop_subsets(const SharingMatrix& m, int k, bool strict) {
    int n = static_cast<int>(m.size());
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (std::popcount(mask) != k)
            continue;
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1))
                continue;
            Rational sum;
            for (int j = 0; j < n; ++j)
                if (mask >> j & 1)
                    sum += m.at(i, j);
            Rational own = Rational(k) * m.at(i, i);
            if (strict ? !(own > sum) : !(own >= sum))
                return false;
        }
    }
    return true;
}

// Excluded form: for every i and every size-(k-1) subset J of the others,
// (k-1) * M[i][i] >= sum over J of row i.
inline bool kprop_excluded(const SharingMatrix& m, int k, bool strict) {
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
            if ((mask >> i & 1) || std::popcount(mask) != k - 1)
                continue;
            Rational sum;
            for (int j = 0; j < n; ++j)
                if (mask >> j & 1)
                    sum += m.at(i, j);
            Rational own = Rational(k - 1) * m.at(i, i);
            if (strict ? !(own > sum) : !(own >= sum))
                return false;
        }
    }
    return true;
}

}  // namespace fairdiv::testing
