#include "io.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace fairdiv {

namespace {

Rational rat_at(const Json& j, const std::string& where) {
    if (!j.is_string())
        raise(ErrorKind::Parse, where + ": expected a rational string \"p\" or \"p/q\"");
    const std::string text = j.get<std::string>();
    auto r = Rational::parse(text);
    if (!r)
        raise(ErrorKind::Parse, where + ": bad rational literal \"" + text + "\"");
    return *r;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        raise(ErrorKind::Parse, where + ": missing \"" + std::string(key) + "\"");
    return *it;
}

Geometry geometry_from(const Json& j, const std::string& where) {
    if (j.is_string()) {
        if (j == "cake")
            return Geometry::Cake;
        if (j == "pie")
            return Geometry::Pie;
    }
    raise(ErrorKind::Parse, where + ": geometry must be \"cake\" or \"pie\"");
}

Json witness_to_json(const Witness& w) {
    return Json{{"player", w.player}, {"others", w.others}, {"slack", w.slack.str()}};
}

}  // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::Parse, e.what());
    }
}

Json scenario_to_json(const Scenario& s) {
    Json players = Json::array();
    for (std::size_t i = 0; i < s.measures.size(); ++i) {
        const auto& m = s.measures[i];
        Json density = Json::array();
        for (std::size_t c = 0; c + 1 < m.breakpoints().size(); ++c) {
            if (m.values()[c].is_zero())
                continue;
            density.push_back({{"start", m.breakpoints()[c].str()},
                               {"end", m.breakpoints()[c + 1].str()},
                               {"value", m.values()[c].str()}});
        }
        players.push_back({{"name", s.player_names[i]}, {"density", density}});
    }
    Json j{{"geometry", geometry_name(s.geometry)}, {"players", players}};
    if (!s.divisions.empty()) {
        Json divs = Json::array();
        for (const auto& [name, d] : s.divisions) {
            Json dv{{"name", name}};
            Json fields = division_to_json(d);
            for (const auto& [key, value] : fields.items())
                dv[key] = value;
            divs.push_back(std::move(dv));
        }
        j["divisions"] = std::move(divs);
    }
    return j;
}

Scenario scenario_from_json(const Json& j) {
    if (!j.is_object())
        raise(ErrorKind::Parse, "scenario: expected an object");
    Scenario s;
    s.geometry = geometry_from(field(j, "geometry", "scenario"), "scenario.geometry");
    const Json& players = field(j, "players", "scenario");
    if (!players.is_array() || players.empty())
        raise(ErrorKind::Parse, "scenario.players: expected a non-empty array");
    for (std::size_t i = 0; i < players.size(); ++i) {
        const std::string where = "players[" + std::to_string(i) + "]";
        const Json& p = players[i];
        if (!p.is_object())
            raise(ErrorKind::Parse, where + ": expected an object");
        const Json& namej = field(p, "name", where);
        if (!namej.is_string())
            raise(ErrorKind::Parse, where + ".name: expected a string");
        std::string name = namej.get<std::string>();
        for (const auto& existing : s.player_names)
            if (existing == name)
                raise(ErrorKind::Validation, where + ": duplicate player name \"" + name + "\"");
        const Json& dens = field(p, "density", where);
        if (!dens.is_array() || dens.empty())
            raise(ErrorKind::Parse, where + ".density: expected a non-empty array");
        std::vector<DensitySegment> segs;
        for (std::size_t c = 0; c < dens.size(); ++c) {
            const std::string sw = where + ".density[" + std::to_string(c) + "]";
            const Json& seg = dens[c];
            if (!seg.is_object())
                raise(ErrorKind::Parse, sw + ": expected an object");
            segs.push_back({rat_at(field(seg, "start", sw), sw + ".start"),
                            rat_at(field(seg, "end", sw), sw + ".end"),
                            rat_at(field(seg, "value", sw), sw + ".value")});
        }
        try {
            s.measures.push_back(
                PiecewiseConstantMeasure::from_segments(s.geometry, std::move(segs)));
        } catch (const Error& e) {
            raise(e.kind(), where + " (\"" + name + "\"): " + e.what());
        }
        s.player_names.push_back(std::move(name));
    }
    if (auto it = j.find("divisions"); it != j.end()) {
        if (!it->is_array())
            raise(ErrorKind::Parse, "scenario.divisions: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string where = "divisions[" + std::to_string(i) + "]";
            const Json& dj = (*it)[i];
            if (!dj.is_object())
                raise(ErrorKind::Parse, where + ": expected an object");
            const Json& namej = field(dj, "name", where);
            if (!namej.is_string())
                raise(ErrorKind::Parse, where + ".name: expected a string");
            std::string name = namej.get<std::string>();
            for (const auto& [existing, unused] : s.divisions)
                if (existing == name)
                    raise(ErrorKind::Validation,
                          where + ": duplicate division name \"" + name + "\"");
            try {
                AnyDivision d = division_from_json(s.geometry, dj);
                if (division_players(d) != s.players())
                    raise(ErrorKind::Validation,
                          "has " + std::to_string(division_players(d)) + " pieces for " +
                              std::to_string(s.players()) + " players");
                s.divisions.emplace_back(std::move(name), std::move(d));
            } catch (const Error& e) {
                raise(e.kind(), where + " (\"" + name + "\"): " + e.what());
            }
        }
    }
    return s;
}

Scenario scenario_from_string(const std::string& text) {
    return scenario_from_json(parse_json_text(text));
}

Scenario scenario_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(ErrorKind::Parse, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_string(buf.str());
}

Json division_to_json(const AnyDivision& d) {
    if (const auto* c = std::get_if<ConnectedDivision>(&d)) {
        Json cuts = Json::array();
        for (const auto& x : c->cuts())
            cuts.push_back(x.str());
        return Json{{"type", "connected"}, {"cuts", cuts}, {"assignment", c->assignment()}};
    }
    const auto& gd = std::get<GeneralDivision>(d);
    Json shares = Json::array();
    for (const auto& share : gd.shares()) {
        Json list = Json::array();
        for (const auto& iv : share)
            list.push_back({{"start", iv.start().str()}, {"end", iv.end().str()}});
        shares.push_back(std::move(list));
    }
    return Json{{"type", "general"}, {"shares", shares}};
}

AnyDivision division_from_json(Geometry g, const Json& j) {
    if (!j.is_object())
        raise(ErrorKind::Parse, "division: expected an object");
    const Json& type = field(j, "type", "division");
    if (type == "connected") {
        const Json& cj = field(j, "cuts", "division");
        if (!cj.is_array())
            raise(ErrorKind::Parse, "division.cuts: expected an array");
        std::vector<Rational> cuts;
        for (std::size_t i = 0; i < cj.size(); ++i)
            cuts.push_back(rat_at(cj[i], "division.cuts[" + std::to_string(i) + "]"));
        const Json& aj = field(j, "assignment", "division");
        if (!aj.is_array())
            raise(ErrorKind::Parse, "division.assignment: expected an array");
        std::vector<int> assignment;
        for (std::size_t i = 0; i < aj.size(); ++i) {
            if (!aj[i].is_number_integer())
                raise(ErrorKind::Parse,
                      "division.assignment[" + std::to_string(i) + "]: expected an integer");
            assignment.push_back(aj[i].get<int>());
        }
        return ConnectedDivision::make(g, std::move(cuts), std::move(assignment));
    }
    if (type == "general") {
        const Json& sj = field(j, "shares", "division");
        if (!sj.is_array())
            raise(ErrorKind::Parse, "division.shares: expected one share list per player");
        std::vector<std::vector<Interval>> shares;
        for (std::size_t p = 0; p < sj.size(); ++p) {
            const std::string where = "division.shares[" + std::to_string(p) + "]";
            const Json& share = sj[p];
            if (!share.is_array())
                raise(ErrorKind::Parse, where + ": expected an array");
            std::vector<Interval> iv;
            for (std::size_t q = 0; q < share.size(); ++q) {
                const std::string sw = where + "[" + std::to_string(q) + "]";
                const Json& seg = share[q];
                if (!seg.is_object())
                    raise(ErrorKind::Parse, sw + ": expected an object");
                iv.push_back(Interval::make(g, rat_at(field(seg, "start", sw), sw + ".start"),
                                            rat_at(field(seg, "end", sw), sw + ".end")));
            }
            shares.push_back(std::move(iv));
        }
        return GeneralDivision::make(g, std::move(shares));
    }
    raise(ErrorKind::Parse, "division.type must be \"connected\" or \"general\"");
}

Json matrix_to_json(const SharingMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.rows()) {
        Json r = Json::array();
        for (const auto& x : row)
            r.push_back(x.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

Json report_to_json(const FairnessReport& r) {
    Json notions = Json::array();
    for (const auto& e : r.notions) {
        Json one{{"notion", e.notion}, {"holds", e.holds}};
        if (e.witness)
            one["witness"] = witness_to_json(*e.witness);
        notions.push_back(std::move(one));
    }
    auto profile = [](const std::vector<bool>& v, int first_k) {
        Json arr = Json::array();
        for (std::size_t i = 0; i < v.size(); ++i)
            arr.push_back({{"k", static_cast<int>(i) + first_k}, {"holds", static_cast<bool>(v[i])}});
        return arr;
    };
    return Json{{"players", r.players},
                {"notions", notions},
                {"k_proportional", profile(r.k_proportional, 2)},
                {"strong_k_proportional", profile(r.strong_k_proportional, 2)},
                {"chb", profile(r.chb, 1)},
                {"clb", profile(r.clb, 1)}};
}

Json certificate_to_json(const SearchCertificate& c) {
    Json j{{"theorem", c.theorem},
           {"n", c.n},
           {"k", c.k},
           {"grid_step", c.grid_step.str()},
           {"refine_rounds", c.refine_rounds},
           {"best_violation", c.best_violation},
           {"exact_violation", c.exact_violation.str()},
           {"assignment_classes", c.assignment_classes},
           {"divisions_examined", c.divisions_examined},
           {"near_feasible_seen", c.near_feasible_seen},
           {"structure_violations", c.structure_violations},
           {"kprop_divisions_found", c.kprop_divisions_found},
           {"diagonal_failures", c.diagonal_failures},
           {"domination_failures", c.domination_failures},
           {"bar_met", c.bar_met},
           {"wall_seconds", c.wall_seconds}};
    if (c.best_division)
        j["best_division"] = division_to_json(AnyDivision(*c.best_division));
    return j;
}

Json ledger_to_json(const QueryLedger& l) {
    return Json{{"eval", l.eval_count}, {"cut", l.cut_count}};
}

}  // namespace fairdiv
