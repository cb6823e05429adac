#pragma once

#include <string_view>

namespace sg {

/// Comment-level roles. MainVictim belongs to the per-session sentinel node
/// only; consensus never assigns it to a comment.
enum class Role {
  Bully,
  BullyAssistant,
  AggressiveVictim,
  NonAggressiveVictim,
  MainVictim,
  AggressiveDefender,
  NonAggDefenderSupportVictim,  // non-aggressive defender, supports the victims
  NonAggDefenderConfrontBully,  // non-aggressive defender, confronts the bullies
  PassiveBystander,
};

enum class SeverityLabel {
  NotBullying,
  Mild,
  Moderate,
  Severe,
};

/// Session-level main-victim consensus after merging OP and Picture votes.
enum class MainVictimLabel {
  Poster,
  Participants,
  Other,
};

/// Raw per-annotator main-victim vote, before the OP/Picture merge.
enum class VictimVote {
  Op,
  Picture,
  Participants,
  Other,
};

/// Node classes used by the graph edge rules and motif colors.
enum class RoleClass {
  Victim,
  Bully,
  Defender,
};

/// True for roles an annotator may pick only together with is_bullying=true.
bool is_bullying_side(Role role);

/// Partition of graph-legal roles into Victim/Bully/Defender.
/// Throws Internal for PassiveBystander, which never reaches a graph.
RoleClass role_class(Role role);

/// Tie-break position within the role's side; lower wins.
int role_preference(Role role);

/// Numeric severity: NotBullying and Mild map to 1, Moderate 2, Severe 3.
double severity_value(SeverityLabel label);

std::string_view role_name(Role role);
std::string_view severity_name(SeverityLabel label);
std::string_view main_victim_name(MainVictimLabel label);
std::string_view victim_vote_name(VictimVote vote);

Role parse_role(std::string_view text);                 // throws UnknownRole
SeverityLabel parse_severity(std::string_view text);    // throws ParseError
VictimVote parse_victim_vote(std::string_view text);    // throws ParseError
MainVictimLabel parse_main_victim(std::string_view text);

}  // namespace sg
