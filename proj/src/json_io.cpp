#include "tlt/json_io.hpp"

#include "tlt/errors.hpp"

namespace tlt {

using nlohmann::json;

json tableau_to_json(const Tableau& t) {
  json j;
  j["rows"] = t.rows;
  json pts = json::array();
  for (const Cell& p : t.points) pts.push_back({p.r, p.c});
  j["points"] = std::move(pts);
  return j;
}

Tableau tableau_from_json(const json& j) {
  if (!j.contains("rows") || !j.contains("points"))
    throw DomainError("tableau JSON needs \"rows\" and \"points\"");
  std::vector<int> rows = j["rows"].get<std::vector<int>>();
  std::vector<Cell> points;
  for (const auto& p : j["points"]) {
    if (!p.is_array() || p.size() != 2) throw DomainError("point must be [r,c]");
    points.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  return validate(std::move(rows), std::move(points));
}

json code_to_json(const InsertionCode& c) {
  json j;
  j["code"] = c.entries;
  return j;
}

InsertionCode code_from_json(const json& j) {
  if (!j.contains("code")) throw DomainError("code JSON needs \"code\"");
  return InsertionCode{j["code"].get<std::vector<int>>()};
}

json stat_report_to_json(const StatReport& r) {
  json j;
  j["n"] = r.n;
  j["total_tableaux"] = to_string(r.total_tableaux);
  j["total_oc"] = to_string(r.total_oc);
  j["total_corners"] = to_string(r.total_corners);
  json hist = json::array();
  for (const Int& v : r.oc_histogram) hist.push_back(to_string(v));
  j["oc_histogram"] = std::move(hist);
  j["variance"] = to_string(r.variance);
  return j;
}

json distribution_to_json(const StateDistribution& d) {
  json j = json::object();
  for (const auto& [s, p] : d.probs) j[s.empty() ? "" : s] = to_string(p);
  return j;
}

}  // namespace tlt
