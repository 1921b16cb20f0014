#pragma once

#include "freeness/bounds.hpp"

#include <json.hpp>

#include <string>

namespace freeness {

inline constexpr int kReportSchemaVersion = 1;
std::string_view tool_version();

struct ReportContext {
    std::string input;                  // echo of the input argument
    std::optional<double> wall_time_ms; // omitted when absent
};

nlohmann::json to_json(const Graph& g);
/// Inverse of to_json(Graph); throws ParseError on malformed documents.
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Graph& g, const Bound& b);
/// Rebuilds a bound from its JSON form, resolving cycles and rotations against g.
/// Throws ParseError or EmbeddingError on malformed payloads.
Bound bound_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json to_json(const Graph& g, const BoundReport& r, const ReportContext& ctx);
nlohmann::json to_json(const Graph& g, const ConjectureScan& s);

}  // namespace freeness
