#include "sessiongraph/consensus.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "sessiongraph/errors.hpp"

namespace sg {

double map_severity(std::span<const SeverityLabel> labels) {
  if (labels.empty()) {
    throw EmptyMajority("severity mean over an empty annotator group");
  }
  double sum = 0.0;
  for (SeverityLabel label : labels) sum += severity_value(label);
  return sum / static_cast<double>(labels.size());
}

void validate_annotation(const AnnotationRecord& record) {
  if (record.role == Role::MainVictim) {
    throw InconsistentAnnotation("annotator '" + record.annotator_id +
                                 "': main_victim is not a comment role");
  }
  if (is_bullying_side(record.role) != record.is_bullying) {
    throw InconsistentAnnotation("annotator '" + record.annotator_id + "': role '" +
                                 std::string(role_name(record.role)) +
                                 "' disagrees with is_bullying flag");
  }
  if (!record.is_bullying && record.severity != SeverityLabel::NotBullying) {
    throw InconsistentAnnotation("annotator '" + record.annotator_id +
                                 "': non-bullying annotation carries severity '" +
                                 std::string(severity_name(record.severity)) + "'");
  }
}

std::optional<ResolvedComment> resolve_comment(const CommentBundle& bundle) {
  if (bundle.annotations.empty()) {
    throw Error("comment '" + bundle.comment_id + "' has no annotations");
  }
  for (const AnnotationRecord& record : bundle.annotations) {
    validate_annotation(record);
  }

  std::size_t bullying = 0;
  for (const AnnotationRecord& record : bundle.annotations) {
    if (record.is_bullying) ++bullying;
  }
  // Strict majority keeps the bullying side; even splits resolve to
  // not-bullying.
  const bool keep_bullying = 2 * bullying > bundle.annotations.size();

  std::array<int, 4> votes{};  // keyed by role_preference within the kept side
  std::array<bool, 4> seen{};
  std::array<Role, 4> role_at{};
  std::vector<SeverityLabel> kept_labels;
  for (const AnnotationRecord& record : bundle.annotations) {
    if (record.is_bullying != keep_bullying) continue;
    const int slot = role_preference(record.role);
    ++votes[slot];
    seen[slot] = true;
    role_at[slot] = record.role;
    kept_labels.push_back(record.severity);
  }

  // Plurality role; exact ties fall to the preference order, which is the
  // slot order itself (slot 0 is the most preferred).
  int best = -1;
  for (int slot = 0; slot < 4; ++slot) {
    if (!seen[slot]) continue;
    if (best < 0 || votes[slot] > votes[best]) best = slot;
  }
  if (best < 0) {
    throw Internal("resolve_comment: kept side has no annotations");
  }
  const Role role = role_at[best];
  if (role == Role::PassiveBystander) {
    return std::nullopt;
  }

  ResolvedComment resolved;
  resolved.comment_id = bundle.comment_id;
  resolved.session_id = bundle.session_id;
  resolved.author = bundle.author;
  resolved.timestamp = bundle.timestamp;
  resolved.role = role;
  resolved.severity = map_severity(kept_labels);
  resolved.sequence = 0;
  return resolved;
}

MainVictimLabel resolve_main_victim(std::span<const VictimVote> votes) {
  if (votes.empty()) {
    throw Error("main-victim vote list is empty");
  }
  int poster = 0, participants = 0, other = 0;
  for (VictimVote vote : votes) {
    switch (vote) {
      case VictimVote::Op:
      case VictimVote::Picture: ++poster; break;
      case VictimVote::Participants: ++participants; break;
      case VictimVote::Other: ++other; break;
    }
  }
  const int top = std::max({poster, participants, other});
  if (poster == top) return MainVictimLabel::Poster;  // Poster wins all its ties
  if (participants == top) return MainVictimLabel::Participants;
  return MainVictimLabel::Other;
}

}  // namespace sg
