#pragma once

#include <string>

#include <json.hpp>

#include "sessiongraph/graph.hpp"
#include "sessiongraph/stamp.hpp"

namespace sg {

/// DOT rendering with (user, role) node attributes and two-decimal weights.
std::string graph_to_dot(const SessionGraph& graph, const FileStamp& stamp);

/// GraphML rendering with the same attributes.
std::string graph_to_graphml(const SessionGraph& graph, const FileStamp& stamp);

/// JSON adjacency form; lossless, full-precision weights.
nlohmann::json graph_to_json(const SessionGraph& graph, const FileStamp& stamp);

/// Inverse of graph_to_json. Throws ParseError on schema violations.
SessionGraph graph_from_json(const nlohmann::json& doc);

}  // namespace sg
