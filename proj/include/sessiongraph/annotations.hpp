#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sessiongraph/roles.hpp"

namespace sg {

/// One annotator's labels for one comment.
struct AnnotationRecord {
  std::string annotator_id;
  bool is_bullying = false;
  Role role = Role::PassiveBystander;
  SeverityLabel severity = SeverityLabel::NotBullying;
  std::vector<std::string> topics;  // opaque tags, carried through unused
};

/// A comment together with its 1-5 independent annotations.
struct CommentBundle {
  std::string comment_id;
  std::string session_id;
  std::string author;
  std::int64_t timestamp = 0;  // epoch seconds; ties broken by comment_id
  std::vector<AnnotationRecord> annotations;
};

/// Consensus role and numeric severity for one comment. Passive-bystander
/// comments are dropped before this stage, so role is never PassiveBystander.
struct ResolvedComment {
  std::string comment_id;
  std::string session_id;
  std::string author;
  std::int64_t timestamp = 0;
  Role role = Role::Bully;
  double severity = 1.0;  // in [1, 3]
  int sequence = 0;       // 1-based rank by (timestamp, comment_id)
};

struct ResolvedSession {
  std::string session_id;
  MainVictimLabel main_victim = MainVictimLabel::Poster;
  std::vector<ResolvedComment> comments;  // sorted by sequence
};

}  // namespace sg
