#pragma once

#include <string>

#include <json.hpp>

#include "tlt/insertion.hpp"
#include "tlt/pasep.hpp"
#include "tlt/statistics.hpp"
#include "tlt/tableau.hpp"

namespace tlt {

// {"rows":[...],"points":[[r,c],...]}, points sorted lexicographically.
nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);  // validates

// {"code":[m2,...,mn]}
nlohmann::json code_to_json(const InsertionCode& c);
InsertionCode code_from_json(const nlohmann::json& j);

// Big integers and rationals serialize as strings so nothing overflows.
nlohmann::json stat_report_to_json(const StatReport& r);

// {"1001":"p/q", ...}
nlohmann::json distribution_to_json(const StateDistribution& d);

}  // namespace tlt
