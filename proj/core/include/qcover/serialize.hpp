#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcover/covers.hpp"
#include "qcover/cycles.hpp"
#include "qcover/gradedness.hpp"
#include "qcover/quasi_forest.hpp"

// JSON encodings used in reports and golden files. Field names are stable.
namespace qcover {

nlohmann::json to_json(const Cycle& cycle);
nlohmann::json to_json(const CoverVector& cover);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const DegreeReport& report);
nlohmann::json to_json(const RelationTree& tree);
nlohmann::json to_json(const std::vector<FacetId>& ids);

/// Sorted array of {"a": [...], "k": k}, pretty-printed, trailing newline.
std::string golden_covers(const std::vector<CoverVector>& covers);

CoverVector cover_from_json(const nlohmann::json& j);
std::vector<CoverVector> covers_from_json(const nlohmann::json& j);

}  // namespace qcover
