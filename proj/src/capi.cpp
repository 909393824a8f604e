#include "fairdiv/fairdiv.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algorithms.hpp"
#include "errors.hpp"
#include "fairness.hpp"
#include "fixtures.hpp"
#include "impossibility.hpp"
#include "io.hpp"
#include "scenario.hpp"
#include "strongkprop.hpp"

struct fd_scenario {
    fairdiv::Scenario s;
};

struct fd_division {
    fairdiv::AnyDivision d;
};

namespace {

using namespace fairdiv;

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out)
        std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void set_error(char** errmsg, const std::string& text) {
    if (errmsg)
        *errmsg = dup_string(text);
}

fd_status status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse:
            return FD_ERR_PARSE;
        case ErrorKind::Validation:
            return FD_ERR_VALIDATION;
        case ErrorKind::GeometryMismatch:
            return FD_ERR_GEOMETRY;
        case ErrorKind::InvalidArgument:
            return FD_ERR_INVALID_ARGUMENT;
        case ErrorKind::Infeasible:
            return FD_ERR_INFEASIBLE;
        case ErrorKind::Precondition:
            return FD_ERR_PRECONDITION;
        case ErrorKind::Limit:
            return FD_ERR_LIMIT;
        case ErrorKind::Internal:
            return FD_ERR_INTERNAL;
    }
    return FD_ERR_INTERNAL;
}

template <typename F>
fd_status wrap(char** errmsg, F&& body) {
    try {
        body();
        return FD_OK;
    } catch (const Error& e) {
        set_error(errmsg, e.what());
        return status_of(e.kind());
    } catch (const std::exception& e) {
        set_error(errmsg, e.what());
        return FD_ERR_INTERNAL;
    }
}

void emit(char** out, const Json& j) {
    *out = dup_string(j.dump(2));
    if (!*out)
        throw std::bad_alloc();
}

// The result document doubles as a scenario whose only division is the
// solved one, so callers can re-parse and re-check it unchanged.
Json solve_document(const Scenario& s, const std::string& algorithm) {
    Json result{{"algorithm", algorithm}};
    std::optional<AnyDivision> solved;
    if (algorithm == "equitable") {
        EquitableResult r = equitable_connected_search(s.measures);
        result["common_value"] = r.common_value.str();
        result["order"] = r.order;
        result["iterations"] = r.iterations;
        solved = AnyDivision(std::move(r.division));
    } else if (algorithm == "cut-and-choose" || algorithm == "last-diminisher" ||
               algorithm == "even-paz") {
        // These protocols work left to right, so a pie is opened at 0 and the
        // answer is wrapped back onto the circle.
        MeasureList opened;
        const MeasureList* ms = &s.measures;
        if (s.geometry == Geometry::Pie) {
            opened.reserve(s.measures.size());
            for (const auto& m : s.measures)
                opened.push_back(with_geometry(m, Geometry::Cake));
            ms = &opened;
        }
        QueryLedger ledger;
        std::vector<RWOracle> oracles;
        oracles.reserve(ms->size());
        for (const auto& m : *ms)
            oracles.emplace_back(m, ledger);
        ConnectedDivision div = algorithm == "cut-and-choose" ? cut_and_choose(oracles)
                                : algorithm == "last-diminisher"
                                    ? last_diminisher(oracles)
                                    : even_paz(oracles);
        if (s.geometry == Geometry::Pie)
            div = cake_as_pie(div);
        result["ledger"] = ledger_to_json(ledger);
        solved = AnyDivision(std::move(div));
    } else {
        raise(ErrorKind::InvalidArgument,
              "unknown algorithm \"" + algorithm +
                  "\" (expected cut-and-choose, last-diminisher, even-paz, or equitable)");
    }
    result["sharing_matrix"] = matrix_to_json(sharing_matrix(*solved, s.measures));
    Scenario out;
    out.geometry = s.geometry;
    out.player_names = s.player_names;
    out.measures = s.measures;
    out.divisions.emplace_back(algorithm, std::move(*solved));
    Json doc = scenario_to_json(out);
    doc["result"] = std::move(result);
    return doc;
}

}  // namespace

extern "C" {

const char* fd_version(void) {
    return "1.0.0";
}

void fd_string_free(char* s) {
    std::free(s);
}

fd_status fd_scenario_parse(const char* json, fd_scenario** out, char** errmsg) {
    if (!json || !out) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    return wrap(errmsg, [&] { *out = new fd_scenario{scenario_from_string(json)}; });
}

void fd_scenario_free(fd_scenario* s) {
    delete s;
}

int fd_scenario_players(const fd_scenario* s) {
    return s ? s->s.players() : 0;
}

fd_status fd_scenario_to_json(const fd_scenario* s, char** json, char** errmsg) {
    if (!s || !json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] { emit(json, scenario_to_json(s->s)); });
}

fd_status fd_scenario_division_names(const fd_scenario* s, char** names_json, char** errmsg) {
    if (!s || !names_json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] {
        Json names = Json::array();
        for (const auto& [name, unused] : s->s.divisions)
            names.push_back(name);
        emit(names_json, names);
    });
}

fd_status fd_division_parse(const fd_scenario* s, const char* json, fd_division** out,
                            char** errmsg) {
    if (!s || !json || !out) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    return wrap(errmsg, [&] {
        AnyDivision d = division_from_json(s->s.geometry, parse_json_text(json));
        if (division_players(d) != s->s.players())
            raise(ErrorKind::Validation,
                  "division has " + std::to_string(division_players(d)) + " pieces for " +
                      std::to_string(s->s.players()) + " players");
        *out = new fd_division{std::move(d)};
    });
}

fd_status fd_scenario_division(const fd_scenario* s, const char* name, fd_division** out,
                               char** errmsg) {
    if (!s || !name || !out) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    return wrap(errmsg, [&] {
        const AnyDivision* d = s->s.division(name);
        if (!d)
            raise(ErrorKind::InvalidArgument, "no division named \"" + std::string(name) + "\"");
        *out = new fd_division{*d};
    });
}

void fd_division_free(fd_division* d) {
    delete d;
}

fd_status fd_division_to_json(const fd_division* d, char** json, char** errmsg) {
    if (!d || !json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] { emit(json, division_to_json(d->d)); });
}

fd_status fd_sharing_matrix(const fd_scenario* s, const fd_division* d, char** matrix_json,
                            char** errmsg) {
    if (!s || !d || !matrix_json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg,
                [&] { emit(matrix_json, matrix_to_json(sharing_matrix(d->d, s->s.measures))); });
}

fd_status fd_check(const fd_scenario* s, const fd_division* d, char** report_json,
                   char** errmsg) {
    if (!s || !d || !report_json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] {
        emit(report_json, report_to_json(analyze(sharing_matrix(d->d, s->s.measures))));
    });
}

fd_status fd_solve(const fd_scenario* s, const char* algorithm, char** result_json,
                   char** errmsg) {
    if (!s || !algorithm || !result_json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] { emit(result_json, solve_document(s->s, algorithm)); });
}

fd_status fd_equality_classes(const fd_scenario* s, char** classes_json, char** errmsg) {
    if (!s || !classes_json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] {
        EqualityClasses ec = equality_classes(s->s.measures);
        emit(classes_json, Json{{"classes", ec.classes}, {"max_size", ec.max_size}});
    });
}

fd_status fd_strong_k_exists(const fd_scenario* s, int k, int* exists, char** errmsg) {
    if (!s || !exists) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] { *exists = strong_k_exists(s->s.measures, k) ? 1 : 0; });
}

fd_status fd_strong_k_division(const fd_scenario* s, int k, char** result_json, char** errmsg) {
    if (!s || !result_json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] {
        StrongKResult r = strong_k_division(s->s.measures, k);
        AnyDivision d(std::move(r.division));
        emit(result_json,
             Json{{"k", k},
                  {"exists", true},
                  {"epsilon", r.epsilon.str()},
                  {"division", division_to_json(d)},
                  {"sharing_matrix", matrix_to_json(sharing_matrix(d, s->s.measures))}});
    });
}

fd_status fd_certify_pie(int n, int grid, int refine_rounds, int k, int threads,
                         char** cert_json, char** errmsg) {
    if (!cert_json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] {
        PieSearchOptions opt;
        opt.n = n;
        opt.grid = grid;
        opt.refine_rounds = refine_rounds;
        opt.k = k;
        opt.threads = threads;
        emit(cert_json, certificate_to_json(certify_pie_impossibility(opt)));
    });
}

fd_status fd_certify_cake(int n, int grid, int threads, char** cert_json, char** errmsg) {
    if (!cert_json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] {
        CakeSearchOptions opt;
        opt.n = n;
        opt.grid = grid;
        opt.threads = threads;
        emit(cert_json, certificate_to_json(certify_cake_pareto(opt)));
    });
}

fd_status fd_fixture_names(char** names_json, char** errmsg) {
    if (!names_json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] { emit(names_json, Json(fixture_names())); });
}

fd_status fd_fixture(const char* name, char** scenario_json, char** errmsg) {
    if (!name || !scenario_json) {
        set_error(errmsg, "null argument");
        return FD_ERR_INVALID_ARGUMENT;
    }
    return wrap(errmsg, [&] { emit(scenario_json, scenario_to_json(fixture(name))); });
}

}  // extern "C"
