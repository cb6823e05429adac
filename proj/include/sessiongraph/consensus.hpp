#pragma once

#include <optional>
#include <span>

#include "sessiongraph/annotations.hpp"

namespace sg {

/// Arithmetic mean of the numeric severity scale over the majority-group
/// labels. Throws EmptyMajority on an empty list.
double map_severity(std::span<const SeverityLabel> labels);

/// Checks the record's internal consistency: the role must sit on the side
/// selected by is_bullying, and is_bullying=false forces severity NotBullying.
/// Throws InconsistentAnnotation.
void validate_annotation(const AnnotationRecord& record);

/// Majority vote on is-bullying (even splits resolve to not-bullying), then a
/// plurality vote on the role with preference-order tie-breaking, then mean
/// severity over the kept annotators. Returns nullopt when the consensus role
/// is PassiveBystander: the comment is dropped.
///
/// The returned comment has sequence 0; session assembly assigns it.
std::optional<ResolvedComment> resolve_comment(const CommentBundle& bundle);

/// Merges OP and Picture votes into Poster, then takes the plurality. Ties
/// involving Poster go to Poster; a Participants/Other tie goes to
/// Participants.
MainVictimLabel resolve_main_victim(std::span<const VictimVote> votes);

}  // namespace sg
