#include "qcover/serialize.hpp"

#include "qcover/error.hpp"

namespace qcover {

using nlohmann::json;

json to_json(const std::vector<FacetId>& ids) {
  json out = json::array();
  for (FacetId id : ids) out.push_back(id.value);
  return out;
}

json to_json(const Cycle& cycle) { return {{"vertices", cycle.vertices}, {"facets", to_json(cycle.facets)}}; }

json to_json(const CoverVector& cover) { return {{"a", cover.a}, {"k", cover.k}}; }

json to_json(const Verdict& verdict) {
  json out;
  out["standard_graded"] = verdict.standard_graded;
  out["method"] = std::string(to_string(verdict.method));
  out["bound_used"] = verdict.bound_used ? json(*verdict.bound_used) : json(nullptr);
  out["cycle_witness"] = verdict.cycle_witness ? to_json(*verdict.cycle_witness) : json(nullptr);
  out["cover_witness"] = verdict.cover_witness ? to_json(*verdict.cover_witness) : json(nullptr);
  return out;
}

json to_json(const DegreeReport& report) {
  json counts = json::object();
  for (const auto& [k, n] : report.counts) counts[std::to_string(k)] = n;
  json certificates = json::object();
  for (const auto& [k, c] : report.certificates) certificates[std::to_string(k)] = to_json(c);
  return {{"d", report.d},
          {"k_max", report.k_max},
          {"exact", false},
          {"counts", counts},
          {"certificates", certificates}};
}

json to_json(const RelationTree& tree) {
  json edges = json::array();
  for (const auto& [child, parent] : tree.edges()) edges.push_back({child.value, parent.value});
  return {{"root", tree.root().value}, {"nodes", to_json(tree.nodes())}, {"edges", edges}};
}

std::string golden_covers(const std::vector<CoverVector>& covers) {
  std::vector<CoverVector> sorted = covers;
  std::sort(sorted.begin(), sorted.end());
  json out = json::array();
  for (const auto& c : sorted) out.push_back(to_json(c));
  return out.dump(1) + "\n";
}

CoverVector cover_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("k")) {
    throw Error(ErrorCode::ParseError, "a cover is an object with fields \"a\" and \"k\"");
  }
  return CoverVector{j.at("a").get<std::vector<int>>(), j.at("k").get<int>()};
}

std::vector<CoverVector> covers_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of covers");
  std::vector<CoverVector> out;
  for (const auto& item : j) out.push_back(cover_from_json(item));
  return out;
}

}  // namespace qcover
