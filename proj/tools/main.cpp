#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fairdiv/fairdiv.h"
#include "json.hpp"

using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailed = 1; // the property under test does not hold
constexpr int kExitInput = 2;  // bad input or unusable options

int exit_code(fd_status st) {
    switch (st) {
        case FD_OK:
            return 0;
        case FD_ERR_INFEASIBLE:
        case FD_ERR_LIMIT:
            return kExitFailed;
        default:
            return kExitInput;
    }
}

[[noreturn]] void die(fd_status st, char* errmsg, const std::string& prefix = "") {
    std::fprintf(stderr, "error: %s%s\n", prefix.c_str(), errmsg ? errmsg : "unknown failure");
    fd_string_free(errmsg);
    std::exit(exit_code(st));
}

// Runs f(&out, &err); exits with the mapped code on failure.
template <typename F>
std::string call(F&& f, const std::string& prefix = "") {
    char* out = nullptr;
    char* err = nullptr;
    fd_status st = f(&out, &err);
    if (st != FD_OK) {
        fd_string_free(out);
        die(st, err, prefix);
    }
    std::string text = out ? out : "";
    fd_string_free(out);
    return text;
}

struct ScenarioHandle {
    fd_scenario* ptr = nullptr;
    ~ScenarioHandle() { fd_scenario_free(ptr); }
};

struct DivisionHandle {
    fd_division* ptr = nullptr;
    ~DivisionHandle() { fd_division_free(ptr); }
};

void load_scenario(const std::string& path, ScenarioHandle& s) {
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
        std::exit(kExitInput);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    char* err = nullptr;
    fd_status st = fd_scenario_parse(buf.str().c_str(), &s.ptr, &err);
    if (st != FD_OK)
        die(st, err, path + ": ");
}

int default_threads() {
    if (const char* env = std::getenv("FAIRDIV_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1)
            return v;
    }
    return 1;
}

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w)
        s.append(w - s.size(), ' ');
    return s;
}

// "player 2, J = {2, 4}, slack -1/3" with 1-based indices; J includes the
// witnessing player.
std::string witness_text(const Json& w) {
    int player = w.at("player").get<int>() + 1;
    std::vector<int> members{player};
    for (const auto& o : w.at("others"))
        members.push_back(o.get<int>() + 1);
    std::sort(members.begin(), members.end());
    std::string text = "player " + std::to_string(player) + ", J = {";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i)
            text += ", ";
        text += std::to_string(members[i]);
    }
    text += "}, slack " + w.at("slack").get<std::string>();
    return text;
}

void render_matrix(const Json& matrix, const std::vector<std::string>& players) {
    int n = static_cast<int>(players.size());
    std::size_t roww = 0;
    for (const auto& p : players)
        roww = std::max(roww, p.size());
    std::vector<std::size_t> colw(n);
    for (int j = 0; j < n; ++j) {
        colw[j] = ("X" + std::to_string(j + 1)).size();
        for (int i = 0; i < n; ++i)
            colw[j] = std::max(colw[j], matrix[i][j].get<std::string>().size());
    }
    std::printf("  %s", pad("", roww).c_str());
    for (int j = 0; j < n; ++j)
        std::printf("  %s", pad("X" + std::to_string(j + 1), colw[j]).c_str());
    std::printf("\n");
    for (int i = 0; i < n; ++i) {
        std::printf("  %s", pad(players[i], roww).c_str());
        for (int j = 0; j < n; ++j)
            std::printf("  %s", pad(matrix[i][j].get<std::string>(), colw[j]).c_str());
        std::printf("\n");
    }
}

void render_profile(const char* label, const Json& entries) {
    if (entries.empty())
        return;
    std::printf("%s\n", label);
    for (const auto& e : entries) {
        std::printf("  k=%-2d %s\n", e.at("k").get<int>(),
                    e.at("holds").get<bool>() ? "yes" : "no");
    }
}

// Machine keys are snake_case; the table shows the usual spellings.
std::string notion_label(std::string s) {
    for (auto& c : s)
        if (c == '_') c = ' ';
    auto at = s.find("envy free");
    if (at != std::string::npos) s.replace(at, 9, "envy-free");
    return s;
}

void render_report(const Json& report) {
    std::printf("notions\n");
    std::size_t namew = 0;
    for (const auto& e : report.at("notions"))
        namew = std::max(namew, notion_label(e.at("notion").get<std::string>()).size());
    for (const auto& e : report.at("notions")) {
        std::printf("  %s  %s", pad(notion_label(e.at("notion").get<std::string>()), namew).c_str(),
                    e.at("holds").get<bool>() ? "yes" : "no ");
        if (e.contains("witness"))
            std::printf("  (%s)", witness_text(e.at("witness")).c_str());
        std::printf("\n");
    }
    std::printf("k-proportional\n");
    for (const auto& e : report.at("k_proportional")) {
        std::printf("  k=%-2d %s", e.at("k").get<int>(),
                    e.at("holds").get<bool>() ? "yes" : "no");
        std::printf("\n");
    }
    render_profile("strong k-proportional", report.at("strong_k_proportional"));
    render_profile("hierarchy upper bound", report.at("chb"));
    render_profile("hierarchy lower bound", report.at("clb"));
}

void render_division(const Json& d) {
    if (d.at("type") == "connected") {
        std::printf("cuts:");
        for (const auto& c : d.at("cuts"))
            std::printf(" %s", c.get<std::string>().c_str());
        std::printf("\nassignment:");
        for (const auto& a : d.at("assignment"))
            std::printf(" %d", a.get<int>() + 1);
        std::printf("\n");
        return;
    }
    const Json& shares = d.at("shares");
    for (std::size_t p = 0; p < shares.size(); ++p) {
        std::printf("share %zu:", p + 1);
        for (const auto& iv : shares[p])
            std::printf(" [%s, %s]", iv.at("start").get<std::string>().c_str(),
                        iv.at("end").get<std::string>().c_str());
        std::printf("\n");
    }
}

std::vector<std::string> player_names(fd_scenario* s) {
    Json doc = Json::parse(call([&](char** out, char** err) {
        return fd_scenario_to_json(s, out, err);
    }));
    std::vector<std::string> names;
    for (const auto& p : doc.at("players"))
        names.push_back(p.at("name").get<std::string>());
    return names;
}

int run_check(const std::string& path, const std::string& division, bool json) {
    ScenarioHandle s;
    load_scenario(path, s);
    std::vector<std::string> names = player_names(s.ptr);
    std::vector<std::string> targets;
    if (!division.empty()) {
        targets.push_back(division);
    } else {
        Json all = Json::parse(call([&](char** out, char** err) {
            return fd_scenario_division_names(s.ptr, out, err);
        }));
        for (const auto& name : all)
            targets.push_back(name.get<std::string>());
    }
    if (targets.empty()) {
        std::fprintf(stderr, "error: %s has no divisions to check\n", path.c_str());
        return kExitInput;
    }
    Json checks = Json::array();
    for (const auto& name : targets) {
        DivisionHandle d;
        {
            char* err = nullptr;
            fd_status st = fd_scenario_division(s.ptr, name.c_str(), &d.ptr, &err);
            if (st != FD_OK)
                die(st, err);
        }
        Json matrix = Json::parse(call([&](char** out, char** err) {
            return fd_sharing_matrix(s.ptr, d.ptr, out, err);
        }));
        Json report = Json::parse(call([&](char** out, char** err) {
            return fd_check(s.ptr, d.ptr, out, err);
        }));
        if (json) {
            checks.push_back(
                Json{{"division", name}, {"sharing_matrix", matrix}, {"report", report}});
        } else {
            std::printf("division %s (%d players)\n\n", name.c_str(),
                        fd_scenario_players(s.ptr));
            std::printf("sharing matrix\n");
            render_matrix(matrix, names);
            std::printf("\n");
            render_report(report);
            std::printf("\n");
        }
    }
    if (json) {
        Json doc{{"players", names}, {"checks", checks}};
        std::printf("%s\n", doc.dump(2).c_str());
    }
    return 0;
}

int run_solve(const std::string& path, const std::string& algorithm, bool json) {
    ScenarioHandle s;
    load_scenario(path, s);
    std::string text = call([&](char** out, char** err) {
        return fd_solve(s.ptr, algorithm.c_str(), out, err);
    });
    if (json) {
        std::printf("%s\n", text.c_str());
        return 0;
    }
    Json doc = Json::parse(text);
    const Json& result = doc.at("result");
    std::printf("algorithm: %s\n", algorithm.c_str());
    render_division(doc.at("divisions")[0]);
    if (result.contains("ledger"))
        std::printf("queries: %ld eval, %ld cut\n", result.at("ledger").at("eval").get<long>(),
                    result.at("ledger").at("cut").get<long>());
    if (result.contains("common_value"))
        std::printf("common value: %s (%d solver iterations)\n",
                    result.at("common_value").get<std::string>().c_str(),
                    result.at("iterations").get<int>());
    std::vector<std::string> names = player_names(s.ptr);
    std::printf("sharing matrix\n");
    render_matrix(result.at("sharing_matrix"), names);
    return 0;
}

int run_strong(const std::string& path, int k, bool exists_only, bool json) {
    ScenarioHandle s;
    load_scenario(path, s);
    int exists = 0;
    {
        char* err = nullptr;
        fd_status st = fd_strong_k_exists(s.ptr, k, &exists, &err);
        if (st != FD_OK)
            die(st, err);
    }
    if (!exists) {
        Json classes = Json::parse(call([&](char** out, char** err) {
            return fd_equality_classes(s.ptr, out, err);
        }));
        if (json) {
            Json doc{{"k", k}, {"exists", false}, {"equality_classes", classes}};
            std::printf("%s\n", doc.dump(2).c_str());
        } else {
            std::printf("k = %d: no strong %d-proportional division exists\n", k, k);
            std::printf("largest equality class has %d players; it must stay below k\n",
                        classes.at("max_size").get<int>());
        }
        return kExitFailed;
    }
    if (exists_only) {
        if (json) {
            Json doc{{"k", k}, {"exists", true}};
            std::printf("%s\n", doc.dump(2).c_str());
        } else {
            std::printf("k = %d: a strong %d-proportional division exists\n", k, k);
        }
        return 0;
    }
    std::string text = call([&](char** out, char** err) {
        return fd_strong_k_division(s.ptr, k, out, err);
    });
    if (json) {
        std::printf("%s\n", text.c_str());
        return 0;
    }
    Json doc = Json::parse(text);
    std::printf("k = %d: a strong %d-proportional division exists\n", k, k);
    std::printf("epsilon: %s\n", doc.at("epsilon").get<std::string>().c_str());
    render_division(doc.at("division"));
    std::vector<std::string> names = player_names(s.ptr);
    std::printf("sharing matrix\n");
    render_matrix(doc.at("sharing_matrix"), names);
    return 0;
}

int render_certificate(const std::string& text, bool json) {
    Json c = Json::parse(text);
    bool ok = c.at("bar_met").get<bool>();
    if (json) {
        std::printf("%s\n", text.c_str());
        return ok ? 0 : kExitFailed;
    }
    std::printf("search: %s, n = %d", c.at("theorem").get<std::string>().c_str(),
                c.at("n").get<int>());
    if (c.at("k").get<int>() > 0)
        std::printf(", k = %d", c.at("k").get<int>());
    std::printf("\n");
    std::printf("grid step %s, refine rounds %d\n", c.at("grid_step").get<std::string>().c_str(),
                c.at("refine_rounds").get<int>());
    std::printf("assignment classes %ld, divisions examined %lld\n",
                c.at("assignment_classes").get<long>(),
                c.at("divisions_examined").get<long long>());
    if (c.at("theorem") == "pie-equitable-kprop") {
        std::printf("near-feasible candidates %ld, structure violations %ld\n",
                    c.at("near_feasible_seen").get<long>(),
                    c.at("structure_violations").get<long>());
        std::printf("best violation %.17g (exact %s)\n", c.at("best_violation").get<double>(),
                    c.at("exact_violation").get<std::string>().c_str());
        if (c.contains("best_division"))
            render_division(c.at("best_division"));
        std::printf("verdict: %s\n",
                    ok ? "no grid division is both equitable and k-proportional"
                       : "a (near-)feasible division exists at this resolution");
    } else {
        std::printf("k-proportional divisions found %lld\n",
                    c.at("kprop_divisions_found").get<long long>());
        std::printf("diagonal failures %ld, domination failures %ld\n",
                    c.at("diagonal_failures").get<long>(),
                    c.at("domination_failures").get<long>());
        std::printf("verdict: %s\n", ok ? "every qualifying grid division is dominated"
                                        : "certification failed");
    }
    std::printf("wall time %.2fs\n", c.at("wall_seconds").get<double>());
    return ok ? 0 : kExitFailed;
}

int run_fixtures(const std::string& name, bool json) {
    if (name.empty()) {
        std::string text = call([&](char** out, char** err) {
            return fd_fixture_names(out, err);
        });
        if (json) {
            std::printf("%s\n", text.c_str());
        } else {
            for (const auto& n : Json::parse(text))
                std::printf("%s\n", n.get<std::string>().c_str());
        }
        return 0;
    }
    std::string text = call([&](char** out, char** err) {
        return fd_fixture(name.c_str(), out, err);
    });
    std::printf("%s\n", text.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fair division workbench"};
    app.set_version_flag("--version", fd_version());
    app.require_subcommand(1);

    std::string check_path, check_division;
    bool check_json = false;
    auto* check_cmd = app.add_subcommand("check", "fairness report for a division");
    check_cmd->add_option("scenario", check_path, "scenario JSON file")->required();
    check_cmd->add_option("--division", check_division, "division name (default: all)");
    check_cmd->add_flag("--json", check_json, "machine output");

    std::string solve_path, solve_algorithm;
    bool solve_json = false;
    auto* solve_cmd = app.add_subcommand("solve", "run a division protocol");
    solve_cmd->add_option("scenario", solve_path, "scenario JSON file")->required();
    solve_cmd
        ->add_option("--algorithm", solve_algorithm,
                     "cut-and-choose, last-diminisher, even-paz, or equitable")
        ->required();
    solve_cmd->add_flag("--json", solve_json, "machine output");

    auto* imp_cmd = app.add_subcommand("impossibility", "exhaustive search certificates");
    imp_cmd->require_subcommand(1);

    int pie_n = 5, pie_grid = 60, pie_refine = 3, pie_k = 0, pie_threads = default_threads();
    bool pie_json = false;
    auto* pie_cmd = imp_cmd->add_subcommand(
        "pie", "no connected pie division is equitable and k-proportional");
    pie_cmd->add_option("--n", pie_n, "players");
    pie_cmd->add_option("--grid", pie_grid, "grid cells on the circle (multiple of 6)");
    pie_cmd->add_option("--refine", pie_refine, "halving rounds after the grid pass");
    pie_cmd->add_option("--k", pie_k, "proportionality level (default n-1)");
    pie_cmd->add_option("--threads", pie_threads, "worker threads");
    pie_cmd->add_flag("--json", pie_json, "machine output");

    int cake_n = 5, cake_grid = 40, cake_threads = default_threads();
    bool cake_json = false;
    auto* cake_cmd = imp_cmd->add_subcommand(
        "cake", "every (n-1)-proportional grid division is dominated");
    cake_cmd->add_option("--n", cake_n, "players");
    cake_cmd->add_option("--grid", cake_grid, "grid cells (multiple of 2n)");
    cake_cmd->add_option("--threads", cake_threads, "worker threads");
    cake_cmd->add_flag("--json", cake_json, "machine output");

    std::string strong_path;
    int strong_k = 0;
    bool strong_exists_only = false, strong_json = false;
    auto* strong_cmd = app.add_subcommand("strong-kprop", "strict k-proportional divisions");
    strong_cmd->add_option("scenario", strong_path, "scenario JSON file")->required();
    strong_cmd->add_option("--k", strong_k, "proportionality level")->required();
    strong_cmd->add_flag("--exists-only", strong_exists_only, "skip construction");
    strong_cmd->add_flag("--json", strong_json, "machine output");

    std::string fixture_name;
    bool fixtures_json = false;
    auto* fixtures_cmd = app.add_subcommand("fixtures", "built-in scenarios");
    fixtures_cmd->add_option("name", fixture_name, "emit this scenario (default: list names)");
    fixtures_cmd->add_flag("--json", fixtures_json, "machine output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    if (*check_cmd)
        return run_check(check_path, check_division, check_json);
    if (*solve_cmd)
        return run_solve(solve_path, solve_algorithm, solve_json);
    if (*pie_cmd) {
        std::string text = call([&](char** out, char** err) {
            return fd_certify_pie(pie_n, pie_grid, pie_refine, pie_k, pie_threads, out, err);
        });
        return render_certificate(text, pie_json);
    }
    if (*cake_cmd) {
        std::string text = call([&](char** out, char** err) {
            return fd_certify_cake(cake_n, cake_grid, cake_threads, out, err);
        });
        return render_certificate(text, cake_json);
    }
    if (*strong_cmd)
        return run_strong(strong_path, strong_k, strong_exists_only, strong_json);
    if (*fixtures_cmd)
        return run_fixtures(fixture_name, fixtures_json);
    return kExitInput;
}
