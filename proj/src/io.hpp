#pragma once

#include <string>

#include <json.hpp>

#include "algorithms.hpp"
#include "fairness.hpp"
#include "impossibility.hpp"
#include "scenario.hpp"

namespace fairdiv {

using Json = nlohmann::ordered_json;

// Every rational crosses the boundary as a "p" or "p/q" string; doubles are
// used only for fields that are floats internally (violation scores, wall
// time).

Json parse_json_text(const std::string& text);

Json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const Json& j);
Scenario scenario_from_string(const std::string& text);
Scenario scenario_from_file(const std::string& path);

Json division_to_json(const AnyDivision& d);
AnyDivision division_from_json(Geometry g, const Json& j);

Json matrix_to_json(const SharingMatrix& m);
Json report_to_json(const FairnessReport& r);
Json certificate_to_json(const SearchCertificate& c);
Json ledger_to_json(const QueryLedger& l);

}  // namespace fairdiv
