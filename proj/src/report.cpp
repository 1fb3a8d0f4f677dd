#include "thom/report.hpp"

#include <algorithm>

namespace thom {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json Report::to_json() const {
  Json out = Json::object();
  out["command"] = command;
  out["result"] = result;
  Json list = Json::array();
  for (const auto& c : checks) {
    Json item = Json::object();
    item["name"] = c.name;
    item["pass"] = c.pass;
    if (!c.detail.empty()) item["detail"] = c.detail;
    list.push_back(std::move(item));
  }
  out["checks"] = std::move(list);
  if (seconds) out["seconds"] = *seconds;
  return out;
}

Json render_numbers(const CobordismClass& c) {
  Json out = Json::object();
  for (const auto& [p, v] : c.numbers()) out[p.to_string()] = to_string(v);
  return out;
}

Json render_series(const BetaSeries& s) {
  Json out = Json::object();
  for (const auto& [p, v] : s.coefficients()) out[p.to_string()] = to_string(v);
  return out;
}

Json render_morin(const MorinClass& m) {
  Json out = Json::object();
  out["n"] = m.n();
  out["k"] = m.k();
  Json strata = Json::object();
  for (const auto& [r, cls] : m.strata()) strata[std::to_string(r)] = render_numbers(cls);
  out["strata"] = std::move(strata);
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace thom
