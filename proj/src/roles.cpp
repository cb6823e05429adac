#include "sessiongraph/roles.hpp"

#include <string>

#include "sessiongraph/errors.hpp"

namespace sg {

bool is_bullying_side(Role role) {
  switch (role) {
    case Role::Bully:
    case Role::BullyAssistant:
    case Role::AggressiveVictim:
    case Role::AggressiveDefender:
      return true;
    case Role::NonAggressiveVictim:
    case Role::NonAggDefenderSupportVictim:
    case Role::NonAggDefenderConfrontBully:
    case Role::PassiveBystander:
      return false;
    case Role::MainVictim:
      break;
  }
  throw Internal("is_bullying_side: MainVictim is not an annotation role");
}

RoleClass role_class(Role role) {
  switch (role) {
    case Role::Bully:
    case Role::BullyAssistant:
      return RoleClass::Bully;
    case Role::MainVictim:
    case Role::AggressiveVictim:
    case Role::NonAggressiveVictim:
      return RoleClass::Victim;
    case Role::AggressiveDefender:
    case Role::NonAggDefenderSupportVictim:
    case Role::NonAggDefenderConfrontBully:
      return RoleClass::Defender;
    case Role::PassiveBystander:
      break;
  }
  throw Internal("role_class: PassiveBystander has no node class");
}

int role_preference(Role role) {
  // Bullying side: AggressiveDefender > AggressiveVictim > BullyAssistant > Bully.
  // Non-bullying side: support-victim defender > confront-bully defender >
  // NonAggressiveVictim > PassiveBystander.
  switch (role) {
    case Role::AggressiveDefender: return 0;
    case Role::AggressiveVictim: return 1;
    case Role::BullyAssistant: return 2;
    case Role::Bully: return 3;
    case Role::NonAggDefenderSupportVictim: return 0;
    case Role::NonAggDefenderConfrontBully: return 1;
    case Role::NonAggressiveVictim: return 2;
    case Role::PassiveBystander: return 3;
    case Role::MainVictim: break;
  }
  throw Internal("role_preference: MainVictim is not an annotation role");
}

double severity_value(SeverityLabel label) {
  switch (label) {
    case SeverityLabel::NotBullying: return 1.0;
    case SeverityLabel::Mild: return 1.0;
    case SeverityLabel::Moderate: return 2.0;
    case SeverityLabel::Severe: return 3.0;
  }
  throw Internal("severity_value: bad label");
}

std::string_view role_name(Role role) {
  switch (role) {
    case Role::Bully: return "bully";
    case Role::BullyAssistant: return "bully_assistant";
    case Role::AggressiveVictim: return "aggressive_victim";
    case Role::NonAggressiveVictim: return "non_aggressive_victim";
    case Role::MainVictim: return "main_victim";
    case Role::AggressiveDefender: return "aggressive_defender";
    case Role::NonAggDefenderSupportVictim:
      return "non_aggressive_defender:support_of_the_victim";
    case Role::NonAggDefenderConfrontBully:
      return "non_aggressive_defender:direct_to_the_bully";
    case Role::PassiveBystander: return "passive_bystander";
  }
  throw Internal("role_name: bad role");
}

std::string_view severity_name(SeverityLabel label) {
  switch (label) {
    case SeverityLabel::NotBullying: return "not_bullying";
    case SeverityLabel::Mild: return "mild";
    case SeverityLabel::Moderate: return "moderate";
    case SeverityLabel::Severe: return "severe";
  }
  throw Internal("severity_name: bad label");
}

std::string_view main_victim_name(MainVictimLabel label) {
  switch (label) {
    case MainVictimLabel::Poster: return "poster";
    case MainVictimLabel::Participants: return "participants";
    case MainVictimLabel::Other: return "other";
  }
  throw Internal("main_victim_name: bad label");
}

std::string_view victim_vote_name(VictimVote vote) {
  switch (vote) {
    case VictimVote::Op: return "op";
    case VictimVote::Picture: return "picture";
    case VictimVote::Participants: return "participants";
    case VictimVote::Other: return "other";
  }
  throw Internal("victim_vote_name: bad vote");
}

Role parse_role(std::string_view text) {
  if (text == "bully") return Role::Bully;
  if (text == "bully_assistant") return Role::BullyAssistant;
  if (text == "aggressive_victim") return Role::AggressiveVictim;
  if (text == "non_aggressive_victim") return Role::NonAggressiveVictim;
  if (text == "main_victim") return Role::MainVictim;
  if (text == "aggressive_defender") return Role::AggressiveDefender;
  if (text == "non_aggressive_defender:support_of_the_victim")
    return Role::NonAggDefenderSupportVictim;
  if (text == "non_aggressive_defender:direct_to_the_bully")
    return Role::NonAggDefenderConfrontBully;
  if (text == "passive_bystander") return Role::PassiveBystander;
  throw UnknownRole("unknown role: '" + std::string(text) + "'");
}

SeverityLabel parse_severity(std::string_view text) {
  if (text == "not_bullying") return SeverityLabel::NotBullying;
  if (text == "mild") return SeverityLabel::Mild;
  if (text == "moderate") return SeverityLabel::Moderate;
  if (text == "severe") return SeverityLabel::Severe;
  throw ParseError("unknown severity: '" + std::string(text) + "'");
}

VictimVote parse_victim_vote(std::string_view text) {
  if (text == "op") return VictimVote::Op;
  if (text == "picture") return VictimVote::Picture;
  if (text == "participants") return VictimVote::Participants;
  if (text == "other") return VictimVote::Other;
  throw ParseError("unknown main-victim vote: '" + std::string(text) + "'");
}

MainVictimLabel parse_main_victim(std::string_view text) {
  if (text == "poster") return MainVictimLabel::Poster;
  if (text == "participants") return MainVictimLabel::Participants;
  if (text == "other") return MainVictimLabel::Other;
  throw ParseError("unknown main-victim label: '" + std::string(text) + "'");
}

}  // namespace sg
