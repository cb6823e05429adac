#include "sessiongraph/graph.hpp"

#include "sessiongraph/errors.hpp"

namespace sg {

int SessionGraph::add_node(const NodeId& node) {
  auto [it, inserted] = node_index_.try_emplace(node, static_cast<int>(nodes_.size()));
  if (inserted) {
    nodes_.push_back(node);
    out_weight_.push_back(0.0);
    in_weight_.push_back(0.0);
  }
  return it->second;
}

void SessionGraph::add_edge(int source, int target, double weight) {
  if (source == target) {
    throw Internal("self-loop on node " + std::to_string(source));
  }
  if (weight <= 0.0) {
    throw Internal("non-positive edge weight " + std::to_string(weight));
  }
  if (source < 0 || target < 0 || source >= static_cast<int>(nodes_.size()) ||
      target >= static_cast<int>(nodes_.size())) {
    throw Internal("edge endpoint out of range");
  }
  auto [it, inserted] = edge_index_.try_emplace({source, target}, edges_.size());
  if (inserted) {
    edges_.push_back({source, target, weight});
  } else {
    edges_[it->second].weight += weight;
  }
  out_weight_[source] += weight;
  in_weight_[target] += weight;
}

int SessionGraph::find_node(const NodeId& node) const {
  const auto it = node_index_.find(node);
  return it == node_index_.end() ? -1 : it->second;
}

double SessionGraph::weight(int source, int target) const {
  const auto it = edge_index_.find({source, target});
  return it == edge_index_.end() ? 0.0 : edges_[it->second].weight;
}

bool SessionGraph::operator==(const SessionGraph& other) const {
  if (session_id_ != other.session_id_ || nodes_ != other.nodes_ ||
      edges_.size() != other.edges_.size()) {
    return false;
  }
  for (const Edge& edge : edges_) {
    if (other.weight(edge.source, edge.target) != edge.weight) return false;
  }
  return true;
}

RoleSets role_sets(const SessionGraph& graph) {
  RoleSets sets;
  for (int i = 0; i < static_cast<int>(graph.node_count()); ++i) {
    switch (role_class(graph.nodes()[i].role)) {
      case RoleClass::Bully: sets.bullies.push_back(i); break;
      case RoleClass::Victim: sets.victims.push_back(i); break;
      case RoleClass::Defender: sets.defenders.push_back(i); break;
    }
  }
  return sets;
}

void apply_edge_rules(SessionGraph& graph, int node, double weight) {
  const Role role = graph.nodes().at(node).role;
  const RoleSets sets = role_sets(graph);

  const auto attack = [&](const std::vector<int>& targets, double w) {
    for (int target : targets) {
      if (target != node) graph.add_edge(node, target, w);
    }
  };
  const auto receive = [&](const std::vector<int>& sources, double w) {
    for (int source : sources) {
      if (source != node) graph.add_edge(source, node, w);
    }
  };

  switch (role) {
    case Role::Bully:
    case Role::BullyAssistant:
      attack(sets.victims, weight);
      break;
    case Role::AggressiveDefender:
      receive(sets.victims, weight);
      attack(sets.bullies, weight);
      break;
    case Role::NonAggDefenderConfrontBully:
      attack(sets.bullies, 1.0);
      break;
    case Role::NonAggDefenderSupportVictim:
      receive(sets.victims, 1.0);
      break;
    case Role::AggressiveVictim:
      attack(sets.bullies, weight);
      break;
    case Role::NonAggressiveVictim:
    case Role::MainVictim:
      break;
    case Role::PassiveBystander:
      throw Internal("bystander comment reached the graph builder");
  }
}

SessionGraph build_graph(const ResolvedSession& session) {
  SessionGraph graph(session.session_id);
  graph.add_node({std::string(kMainVictimUser), Role::MainVictim});

  for (const ResolvedComment& comment : session.comments) {
    if (comment.role == Role::MainVictim || comment.role == Role::PassiveBystander) {
      throw Internal("comment '" + comment.comment_id + "' carries role '" +
                     std::string(role_name(comment.role)) + "'");
    }
    const int node = graph.add_node({comment.author, comment.role});
    apply_edge_rules(graph, node, comment.severity);
  }
  return graph;
}

}  // namespace sg
