#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sessiongraph/annotations.hpp"

namespace sg {

/// Username reserved for the per-session main-victim sentinel node.
inline constexpr std::string_view kMainVictimUser = "MAIN_VICTIM";

/// Nodes are (username, role) pairs; the same user appears once per distinct
/// role they take in the session.
struct NodeId {
  std::string user;
  Role role = Role::Bully;

  auto operator<=>(const NodeId&) const = default;
};

struct Edge {
  int source = 0;
  int target = 0;
  double weight = 0.0;
};

/// Directed weighted interaction graph of one session. Edges are keyed by
/// (source, target); repeated interactions accumulate onto the existing edge.
class SessionGraph {
 public:
  SessionGraph() = default;
  explicit SessionGraph(std::string session_id) : session_id_(std::move(session_id)) {}

  /// Inserts the node if absent; returns its index either way.
  int add_node(const NodeId& node);

  /// Adds weight onto the (source, target) edge, creating it when missing.
  /// Self-loops and non-positive weights throw Internal.
  void add_edge(int source, int target, double weight);

  /// Index of the node, or -1 when absent.
  int find_node(const NodeId& node) const;

  const std::string& session_id() const { return session_id_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Current weight of (source, target), or 0 when the edge is absent.
  double weight(int source, int target) const;

  double weighted_out_degree(int node) const { return out_weight_.at(node); }
  double weighted_in_degree(int node) const { return in_weight_.at(node); }

  /// Structural equality: same id, node sequence, and edge weights.
  bool operator==(const SessionGraph& other) const;

 private:
  std::string session_id_;
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::map<NodeId, int> node_index_;
  std::map<std::pair<int, int>, std::size_t> edge_index_;
  std::vector<double> out_weight_;
  std::vector<double> in_weight_;
};

/// Node indices of the bully, victim, and defender subsets, in node order.
struct RoleSets {
  std::vector<int> bullies;
  std::vector<int> victims;
  std::vector<int> defenders;
};

RoleSets role_sets(const SessionGraph& graph);

/// Applies the role-specific edge rules for one comment by `node` with
/// severity `weight`. Targets only nodes already present in the graph:
///   Bully/BullyAssistant   node -> each victim, weight w
///   AggressiveDefender     each victim -> node and node -> each bully, weight w
///   ConfrontBully defender node -> each bully, weight 1
///   SupportVictim defender each victim -> node, weight 1
///   AggressiveVictim       node -> each bully, weight w
///   NonAggressiveVictim / MainVictim: no edges
void apply_edge_rules(SessionGraph& graph, int node, double weight);

/// Replays the session's comments in sequence order over a graph seeded with
/// the main-victim sentinel. An empty session yields the sentinel-only graph.
SessionGraph build_graph(const ResolvedSession& session);

}  // namespace sg
