#pragma once

#include <string>

#include "json.hpp"

#include "semid/census.hpp"
#include "semid/identify.hpp"

namespace semid {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kEngineVersion = "0.1.0";

nlohmann::json report_to_json(const GraphReport& report);
GraphReport report_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const CensusRecord& record);
CensusRecord record_from_json(const nlohmann::json& j);

nlohmann::json summary_to_json(const CensusSummary& summary);

std::string report_to_text(const GraphReport& report);
std::string criteria_to_text(const MixedGraph& g, const CriteriaReport& criteria);
std::string summary_to_text(const CensusSummary& summary);

/// DOT rendering of a classified graph. Directed edges are arrows,
/// bidirected edges dashed double-headed arrows. Nodes carry the w_ii
/// status, edges the l_ij / w_ij status: green for generically identified,
/// blue for algebraically k>=2, red otherwise, gray for unresolved. Labels
/// are decorated for monochrome output: (x) green, ((x)) blue, [x] red;
/// node shapes circle/ellipse/box mirror the same code.
std::string report_to_dot(const GraphReport& report);

}  // namespace semid
