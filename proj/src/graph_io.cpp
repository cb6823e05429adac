#include "sessiongraph/graph_io.hpp"

#include <cstdio>

#include "sessiongraph/errors.hpp"

namespace sg {
namespace {

std::string two_decimals(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string graph_to_dot(const SessionGraph& graph, const FileStamp& stamp) {
  std::string out = "// " + stamp.text("graph-dot") + "\n";
  out += "digraph \"" + dot_escape(graph.session_id()) + "\" {\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    const NodeId& node = graph.nodes()[i];
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(node.user) + "\\n" +
           std::string(role_name(node.role)) + "\", user=\"" + dot_escape(node.user) +
           "\", role=\"" + std::string(role_name(node.role)) + "\"];\n";
  }
  for (const Edge& edge : graph.edges()) {
    const std::string w = two_decimals(edge.weight);
    out += "  n" + std::to_string(edge.source) + " -> n" + std::to_string(edge.target) +
           " [label=\"" + w + "\", weight=\"" + w + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string graph_to_graphml(const SessionGraph& graph, const FileStamp& stamp) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<!-- " + stamp.text("graph-graphml") + " -->\n";
  out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  out += "  <key id=\"user\" for=\"node\" attr.name=\"user\" attr.type=\"string\"/>\n";
  out += "  <key id=\"role\" for=\"node\" attr.name=\"role\" attr.type=\"string\"/>\n";
  out += "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
  out += "  <graph id=\"" + xml_escape(graph.session_id()) + "\" edgedefault=\"directed\">\n";
  for (std::size_t i = 0; i < graph.node_count(); ++i) {
    const NodeId& node = graph.nodes()[i];
    out += "    <node id=\"n" + std::to_string(i) + "\">\n";
    out += "      <data key=\"user\">" + xml_escape(node.user) + "</data>\n";
    out += "      <data key=\"role\">" + std::string(role_name(node.role)) + "</data>\n";
    out += "    </node>\n";
  }
  for (const Edge& edge : graph.edges()) {
    out += "    <edge source=\"n" + std::to_string(edge.source) + "\" target=\"n" +
           std::to_string(edge.target) + "\">\n";
    out += "      <data key=\"weight\">" + two_decimals(edge.weight) + "</data>\n";
    out += "    </edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

nlohmann::json graph_to_json(const SessionGraph& graph, const FileStamp& stamp) {
  nlohmann::json doc;
  doc["kind"] = "session_graph";
  doc["schema_version"] = stamp.schema_version;
  doc["config_hash"] = stamp.config_hash;
  doc["session_id"] = graph.session_id();
  doc["nodes"] = nlohmann::json::array();
  for (const NodeId& node : graph.nodes()) {
    doc["nodes"].push_back({{"user", node.user}, {"role", std::string(role_name(node.role))}});
  }
  doc["edges"] = nlohmann::json::array();
  for (const Edge& edge : graph.edges()) {
    doc["edges"].push_back(
        {{"source", edge.source}, {"target", edge.target}, {"weight", edge.weight}});
  }
  return doc;
}

SessionGraph graph_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("kind").get<std::string>() != "session_graph") {
      throw ParseError("json document is not a session graph");
    }
    SessionGraph graph(doc.at("session_id").get<std::string>());
    for (const auto& node : doc.at("nodes")) {
      graph.add_node({node.at("user").get<std::string>(),
                      parse_role(node.at("role").get<std::string>())});
    }
    const int n = static_cast<int>(graph.node_count());
    for (const auto& edge : doc.at("edges")) {
      const int source = edge.at("source").get<int>();
      const int target = edge.at("target").get<int>();
      const double weight = edge.at("weight").get<double>();
      if (source < 0 || source >= n || target < 0 || target >= n || source == target ||
          weight <= 0.0) {
        throw ParseError("bad edge " + std::to_string(source) + "->" + std::to_string(target) +
                         " in session-graph json");
      }
      graph.add_edge(source, target, weight);
    }
    return graph;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad session-graph json: ") + e.what());
  }
}

}  // namespace sg
