#include "ocdc/certificate_io.hpp"

#include "ocdc/error.hpp"
#include "ocdc/graph6.hpp"

namespace ocdc {

using nlohmann::json;

json certificate_to_json(const CoverCertificate& c) {
  json elements = json::array();
  if (uses_cycles(c.kind)) {
    for (const auto& x : c.cycles()) elements.push_back(x.vertices());
  } else {
    for (const auto& x : c.paths()) elements.push_back(x.vertices());
  }
  return {{"graph", emit_graph6(c.host)}, {"kind", to_string(c.kind)}, {"elements", elements}, {"provenance", c.provenance}};
}

CoverCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("certificate must be a JSON object", 0);
  for (const char* key : {"graph", "kind", "elements"})
    if (!j.contains(key)) throw ParseError(std::string("certificate lacks \"") + key + "\"", 0);
  if (!j["graph"].is_string() || !j["kind"].is_string() || !j["elements"].is_array())
    throw ParseError("certificate fields have the wrong types", 0);
  Graph g = parse_graph6(j["graph"].get<std::string>());
  CoverKind kind;
  try {
    kind = cover_kind_from_string(j["kind"].get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(e.what(), 0);
  }
  std::vector<std::vector<Vertex>> lists;
  for (const auto& e : j["elements"]) {
    if (!e.is_array()) throw ParseError("each element must be a vertex list", 0);
    std::vector<Vertex> l;
    for (const auto& v : e) {
      if (!v.is_number_integer()) throw ParseError("vertices must be integers", 0);
      l.push_back(v.get<Vertex>());
    }
    lists.push_back(std::move(l));
  }
  const std::string provenance = j.contains("provenance") && j["provenance"].is_string() ? j["provenance"].get<std::string>() : "";
  if (uses_cycles(kind)) {
    std::vector<DirectedCycle> cycles;
    for (auto& l : lists) cycles.emplace_back(std::move(l));
    return make_cycle_certificate(std::move(g), kind, std::move(cycles), provenance);
  }
  std::vector<DirectedPath> paths;
  for (auto& l : lists) paths.emplace_back(std::move(l));
  return make_path_certificate(std::move(g), kind, std::move(paths), provenance);
}

std::string write_certificate(const CoverCertificate& c) { return certificate_to_json(c).dump(); }

CoverCertificate read_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return certificate_from_json(j);
}

json report_to_json(const VerifyReport& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"what", to_string(x.what)}, {"subject", x.subject}, {"observed", x.observed}, {"expected", x.expected}});
  json out = {{"ok", r.ok},
              {"count", r.count},
              {"size_bound", r.size_bound},
              {"small", r.small},
              {"total_length", r.total_length},
              {"violations", v}};
  if (r.cubic_bound) out["cubic_bound"] = *r.cubic_bound;
  if (r.within_cubic_bound) out["within_cubic_bound"] = *r.within_cubic_bound;
  return out;
}

}  // namespace ocdc
