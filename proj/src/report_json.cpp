#include "inducibility/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "inducibility/graph6.hpp"

namespace inducibility {

Json float_json(double value) {
  if (!std::isfinite(value)) return value > 0 ? "inf" : value < 0 ? "-inf" : "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

Json to_json(const SearchResult& r) {
  return Json{{"h", r.pattern},           {"m", r.m},
              {"rho", r.rho},             {"extremal", r.extremal},
              {"truncated", r.truncated}, {"classes", r.classes_scanned},
              {"version", r.version}};
}

SearchResult search_result_from_json(const Json& j) {
  SearchResult r;
  r.pattern = j.at("h").get<std::string>();
  r.m = j.at("m").get<int>();
  r.rho = j.at("rho").get<std::uint64_t>();
  r.extremal = j.at("extremal").get<std::vector<std::string>>();
  r.truncated = j.at("truncated").get<bool>();
  r.classes_scanned = j.at("classes").get<std::uint64_t>();
  r.version = j.at("version").get<std::string>();
  return r;
}

Json to_json(const BoundValue& b) {
  Json j{{"family", b.family},
         {"m", b.m},
         {"kind", to_string(b.kind)},
         {"provenance", b.provenance},
         {"value", float_json(b.value)}};
  if (b.exact) j["exact"] = b.exact->to_string();
  return j;
}

Json to_json(const BlowupSpec& spec) {
  return Json{{"base", write_graph6(spec.base)}, {"sizes", spec.sizes}};
}

Json to_json(const Construction& c) {
  return Json{{"spec", to_json(c.spec)}, {"edges", c.edges}, {"count", c.count}};
}

Json to_json(const OptimalWeighting& w, int n) {
  Json weights = Json::object();
  for (int v = 0; v < n; ++v) {
    const int h = w.weighting.halves[v];
    weights[std::to_string(v)] = h == 1 ? Json(0.5) : Json(h / 2);
  }
  Json matching = Json::array();
  for (const auto& [b, a] : w.decomposition.matching) matching.push_back({b, a});
  return Json{{"weights", weights},
              {"total", w.weighting.total().to_string()},
              {"A", members(w.decomposition.a)},
              {"B", members(w.decomposition.b)},
              {"C", members(w.decomposition.c)},
              {"D", members(w.decomposition.d)},
              {"matching", matching}};
}

Json to_json(const SandwichReport& r) {
  Json bounds = Json::array();
  for (const BoundValue& b : r.bounds) bounds.push_back(to_json(b));
  const double gap_low = r.lower == 0 ? 0.0 : static_cast<double>(r.rho) / r.lower;
  const double gap_high = r.rho == 0 ? 0.0 : r.upper.value / static_cast<double>(r.rho);
  return Json{{"family", r.family},
              {"m", r.m},
              {"lower", r.lower},
              {"rho", r.rho},
              {"upper", to_json(r.upper)},
              {"bounds", bounds},
              {"construction", to_json(r.construction)},
              {"rho_over_lower", float_json(gap_low)},
              {"upper_over_rho", float_json(gap_high)},
              {"extremal", r.search.extremal},
              {"truncated", r.search.truncated},
              {"violations", r.violations},
              {"pass", r.pass()}};
}

}  // namespace inducibility
