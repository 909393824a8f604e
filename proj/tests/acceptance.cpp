// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Tolerances and budgets are pinned here on purpose; change them only with
// a matching change to the documented guarantees.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "algorithms.hpp"
#include "fairness.hpp"
#include "fixtures.hpp"
#include "impossibility.hpp"
#include "io.hpp"
#include "strongkprop.hpp"

#include "fairdiv/fairdiv.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fairdiv;
using fairdiv::testing::Rng;

namespace {

int g_failed = 0;

// body returns an empty string on success, a reason otherwise.
void criterion(const char* name, double budget_seconds,
               const std::function<std::string()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string reason;
    try {
        reason = body();
    } catch (const std::exception& e) {
        reason = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (reason.empty() && budget_seconds > 0 && secs > budget_seconds) {
        std::ostringstream os;
        os << "time budget exceeded: " << secs << "s > " << budget_seconds << "s";
        reason = os.str();
    }
    std::printf("%s  %-32s (%.2fs)\n", reason.empty() ? "PASS" : "FAIL", name, secs);
    if (!reason.empty()) {
        std::printf("      %s\n", reason.c_str());
        ++g_failed;
    }
    std::fflush(stdout);
}

std::string take(char* p) {
    std::string s = p ? p : "";
    fd_string_free(p);
    return s;
}

std::string scale_verdicts_on_block_matrix() {
    Scenario s = fixture("four-player-matrix");
    const AnyDivision* d = s.division("witness");
    if (!d) return "fixture division missing";
    SharingMatrix m = sharing_matrix(*d, s.measures);

    Verdict v2 = is_k_proportional(m, 2);
    if (v2.holds) return "k=2 reported as holding";
    if (!v2.witness) return "k=2 verdict has no witness";
    if (v2.witness->player != 0) return "witness player != 0";
    if (v2.witness->others != std::vector<int>{3}) return "witness subset != {3}";
    if (v2.witness->slack != Rational(-1, 3)) return "witness slack != -1/3";
    if (!is_k_proportional(m, 3).holds) return "k=3 reported as failing";
    if (!is_k_proportional(m, 4).holds) return "k=4 reported as failing";
    return "";
}

std::string scale_invariants_random_matrices() {
    Rng rng(20260816);
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        int n = fairdiv::testing::pick(rng, 2, 8);
        SharingMatrix m = fairdiv::testing::random_sharing_matrix(rng, n);
        bool prev = false, prev_strict = false;
        for (int k = 2; k <= n; ++k) {
            bool fast = is_k_proportional(m, k).holds;
            bool fast_strict = is_strong_k_proportional(m, k).holds;
            if (fast != fairdiv::testing::kprop_excluded(m, k, false))
                return "fast criterion disagrees with excluded-subset form";
            if (fast != fairdiv::testing::kprop_subsets(m, k, false))
                return "fast criterion disagrees with subset enumeration";
            if (fast_strict != fairdiv::testing::kprop_excluded(m, k, true))
                return "strict fast criterion disagrees with excluded-subset form";
            if (fast_strict != fairdiv::testing::kprop_subsets(m, k, true))
                return "strict fast criterion disagrees with subset enumeration";
            if (k > 2 && prev && !fast) return "k-prop does not imply (k+1)-prop";
            if (k > 2 && prev_strict && !fast_strict)
                return "strict k-prop does not imply strict (k+1)-prop";
            prev = fast;
            prev_strict = fast_strict;
        }
        if (is_envy_free(m).holds && !is_proportional(m).holds)
            return "envy-free matrix that is not proportional";
        if (is_envy_free(m).holds != is_k_proportional(m, 2).holds)
            return "envy-free disagrees with k=2";
        if (is_proportional(m).holds != is_k_proportional(m, n).holds)
            return "proportional disagrees with k=n";
    }
    return "";
}

std::string circle_certificate_with_inversion() {
    PieSearchOptions opt;
    opt.n = 5;
    opt.grid = 60;
    opt.refine_rounds = 3;
    opt.k = 0;  // n-1
    opt.threads = 4;
    SearchCertificate cert = certify_pie_impossibility(opt);
    if (!(cert.exact_violation > Rational(1, 1000000)))
        return "minimal violation not above 1e-6: " + cert.exact_violation.str();
    if (!cert.bar_met) return "certificate bar not met";
    if (cert.structure_violations != 0) return "structure counting argument violated";

    PieSearchOptions sane = opt;
    sane.k = 5;
    sane.refine_rounds = 0;
    SearchCertificate inv = certify_pie_impossibility(sane);
    if (inv.exact_violation > Rational(1, 1000000))
        return "sanity inversion (k=n) stayed above 1e-6: " + inv.exact_violation.str();
    if (inv.bar_met) return "sanity inversion claims a positive bar";
    return "";
}

std::string cake_domination_certificate() {
    CakeSearchOptions opt;
    opt.n = 5;
    opt.grid = 40;
    opt.threads = 4;
    SearchCertificate cert = certify_cake_pareto(opt);
    if (cert.kprop_divisions_found < 1) return "no (n-1)-proportional grid division found";
    if (cert.diagonal_failures != 0)
        return "diagonal outside grid tolerance of (1/5,...,1/5)";
    if (cert.domination_failures != 0) return "undominated division found";
    if (!cert.bar_met) return "certificate bar not met";
    return "";
}

std::string strict_scale_construction() {
    Scenario s = fixture("six-player");
    if (strong_k_exists(s.measures, 2)) return "strict k=2 reported possible";
    if (!strong_k_exists(s.measures, 3)) return "strict k=3 reported impossible";

    StrongKResult r = strong_k_division(s.measures, 3);
    SharingMatrix m = sharing_matrix(r.division, s.measures);
    ProperMatrix q = proper_matrix(s.measures);
    int n = s.players();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) != Rational(1, n) + r.epsilon * q.q[i][j])
                return "sharing matrix differs from uniform + eps * perturbation";
    if (!is_strong_k_proportional(m, 3).holds) return "result is not strictly 3-proportional";
    return "";
}

std::string perturbation_matrix_invariants() {
    Rng rng(7151);
    for (int t = 0; t < 200; ++t) {
        int n = fairdiv::testing::pick(rng, 2, 6);
        MeasureList ms = fairdiv::testing::random_measures(rng, Geometry::Cake, n, 5);
        ProperMatrix pm = proper_matrix(ms);
        for (int i = 0; i < n; ++i) {
            Rational row;
            for (int j = 0; j < n; ++j) row = row + pm.q[i][j];
            if (row != Rational(0)) return "row sum not zero";
        }
        for (const auto& dep : dependency_nullspace(ms)) {
            for (int j = 0; j < n; ++j) {
                Rational dot;
                for (int i = 0; i < n; ++i) dot = dot + dep[i] * pm.q[i][j];
                if (dot != Rational(0)) return "measure dependency not annihilated";
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool equal_pair = measures_equal(ms[i], ms[j]);
                if (pm.q[i][i] < pm.q[i][j]) return "diagonal not dominant";
                if (equal_pair && pm.q[i][i] != pm.q[i][j])
                    return "equal measures but unequal perturbation entries";
                if (!equal_pair && pm.q[i][i] == pm.q[i][j])
                    return "strict dominance missing on unequal pair";
            }
    }
    return "";
}

std::string protocol_guarantees() {
    Rng rng(40923);
    for (int t = 0; t < 200; ++t) {
        int n = fairdiv::testing::pick(rng, 2, 8);
        MeasureList ms = fairdiv::testing::random_measures(rng, Geometry::Cake, n, 4);
        QueryLedger ledger;
        std::vector<RWOracle> oracles;
        oracles.reserve(ms.size());
        for (const auto& m : ms) oracles.emplace_back(m, ledger);
        ConnectedDivision d = last_diminisher(oracles);
        if (!is_proportional(sharing_matrix(d, ms)).holds)
            return "last-diminisher output not proportional";
        ConnectedDivision e = even_paz(oracles);
        if (!is_proportional(sharing_matrix(e, ms)).holds)
            return "divide-and-conquer output not proportional";
    }

    for (int n = 2; n <= 64; ++n) {
        MeasureList ms(n, PiecewiseConstantMeasure::uniform(Geometry::Cake));
        QueryLedger ledger;
        std::vector<RWOracle> oracles;
        for (const auto& m : ms) oracles.emplace_back(m, ledger);
        even_paz(oracles);
        double bound = 2.0 * n * std::log2(double(n));
        if (double(ledger.cut_count) > bound) {
            std::ostringstream os;
            os << "cut queries " << ledger.cut_count << " exceed 2n*log2(n) at n=" << n;
            return os.str();
        }
    }

    Scenario pie = fixture("pie-equitable");
    EquitableResult eq = equitable_connected_search(pie.measures);
    if (eq.common_value < Rational(1, pie.players()))
        return "common value below 1/n: " + eq.common_value.str();
    if (eq.division.cuts()[0] != Rational(0)) return "circle not opened at 0";
    SharingMatrix m = sharing_matrix(eq.division, pie.measures);
    if (!is_equitable(m).holds) return "search result not equitable";
    if (!is_proportional(m).holds) return "search result not proportional";
    return "";
}

std::string round_trip_and_determinism() {
    struct Case {
        const char* algorithm;
        std::string scenario;
    };
    char* fx = nullptr;
    if (fd_fixture("four-player-matrix", &fx, nullptr) != FD_OK)
        return "fixture emission failed";
    std::string four = take(fx);
    std::string two = R"({"geometry":"cake","players":[
        {"name":"a","density":[{"start":"0","end":"1/2","value":"3/2"},
                                {"start":"1/2","end":"1","value":"1/2"}]},
        {"name":"b","density":[{"start":"0","end":"1","value":"1"}]}]})";
    if (fd_fixture("pie-equitable", &fx, nullptr) != FD_OK)
        return "fixture emission failed";
    std::string pie = take(fx);
    const Case cases[] = {
        {"cut-and-choose", two},
        {"last-diminisher", four},
        {"even-paz", four},
        {"equitable", pie},
    };

    for (const Case& c : cases) {
        fd_scenario* s = nullptr;
        char* err = nullptr;
        if (fd_scenario_parse(c.scenario.c_str(), &s, &err) != FD_OK)
            return c.scenario.substr(0, 20) + ": " + take(err);
        char* out1 = nullptr;
        char* out2 = nullptr;
        if (fd_solve(s, c.algorithm, &out1, &err) != FD_OK) {
            fd_scenario_free(s);
            return std::string(c.algorithm) + ": " + take(err);
        }
        if (fd_solve(s, c.algorithm, &out2, nullptr) != FD_OK) {
            fd_scenario_free(s);
            return std::string(c.algorithm) + ": second run failed";
        }
        std::string doc1 = take(out1);
        std::string doc2 = take(out2);
        fd_scenario_free(s);
        if (doc1 != doc2) return std::string(c.algorithm) + ": repeated runs differ";

        // The emitted document is itself a scenario; re-check the division.
        fd_scenario* again = nullptr;
        if (fd_scenario_parse(doc1.c_str(), &again, &err) != FD_OK)
            return std::string(c.algorithm) + ": output rejected: " + take(err);
        fd_division* d = nullptr;
        if (fd_scenario_division(again, c.algorithm, &d, &err) != FD_OK) {
            fd_scenario_free(again);
            return std::string(c.algorithm) + ": solved division missing: " + take(err);
        }
        char* matrix = nullptr;
        if (fd_sharing_matrix(again, d, &matrix, nullptr) != FD_OK)
            return std::string(c.algorithm) + ": matrix recomputation failed";
        Json parsed = Json::parse(doc1);
        if (Json::parse(take(matrix)) != parsed["result"]["sharing_matrix"])
            return std::string(c.algorithm) + ": matrix changed across round trip";
        char* rep1 = nullptr;
        char* rep2 = nullptr;
        if (fd_check(again, d, &rep1, nullptr) != FD_OK ||
            fd_check(again, d, &rep2, nullptr) != FD_OK)
            return std::string(c.algorithm) + ": re-check failed";
        std::string r1 = take(rep1);
        std::string r2 = take(rep2);
        fd_division_free(d);
        fd_scenario_free(again);
        if (r1 != r2) return std::string(c.algorithm) + ": repeated checks differ";
    }

    // Strict construction is a solver too; same bar.
    fd_scenario* six = nullptr;
    if (fd_fixture("six-player", &fx, nullptr) != FD_OK) return "fixture emission failed";
    std::string six_text = take(fx);
    if (fd_scenario_parse(six_text.c_str(), &six, nullptr) != FD_OK)
        return "six-player parse failed";
    char* s1 = nullptr;
    char* s2 = nullptr;
    if (fd_strong_k_division(six, 3, &s1, nullptr) != FD_OK ||
        fd_strong_k_division(six, 3, &s2, nullptr) != FD_OK) {
        fd_scenario_free(six);
        return "strict construction failed";
    }
    std::string t1 = take(s1);
    std::string t2 = take(s2);
    fd_scenario_free(six);
    if (t1 != t2) return "repeated strict constructions differ";
    return "";
}

}  // namespace

int main() {
    criterion("scale-verdicts-on-block-matrix", 1.0, scale_verdicts_on_block_matrix);
    criterion("scale-invariants-random-matrices", 30.0, scale_invariants_random_matrices);
    criterion("circle-certificate-with-inversion", 600.0, circle_certificate_with_inversion);
    criterion("cake-domination-certificate", 300.0, cake_domination_certificate);
    criterion("strict-scale-construction", 5.0, strict_scale_construction);
    criterion("perturbation-matrix-invariants", 0.0, perturbation_matrix_invariants);
    criterion("protocol-guarantees", 0.0, protocol_guarantees);
    criterion("round-trip-and-determinism", 0.0, round_trip_and_determinism);
    if (g_failed) std::printf("%d criterion(s) failed\n", g_failed);
    return g_failed ? 1 : 0;
}
