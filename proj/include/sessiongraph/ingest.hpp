#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "sessiongraph/annotations.hpp"

namespace sg {

/// One session's raw rows, grouped but not yet resolved.
struct RawSession {
  std::string session_id;
  std::vector<CommentBundle> comments;
  std::vector<VictimVote> victim_votes;
};

struct IngestStats {
  std::size_t sessions_total = 0;
  std::size_t sessions_retained = 0;
  std::size_t sessions_excluded_other = 0;
  std::size_t sessions_skipped_no_votes = 0;
  std::size_t comments_total = 0;
  std::size_t comments_dropped_bystander = 0;
  std::vector<std::string> warnings;
};

struct IngestResult {
  std::vector<ResolvedSession> sessions;  // ordered by session_id ascending
  IngestStats stats;
};

/// Parses an annotation corpus CSV (schema v1, see docs/annotation-format.md)
/// into per-session raw bundles. Throws ParseError with a file:line locator on
/// malformed rows and UnknownRole on bad role strings.
std::vector<RawSession> parse_corpus_csv(const std::filesystem::path& path);

/// Applies consensus to every comment, drops bystander comments, resolves the
/// main victim, and excludes Other-victim sessions. Sessions come back sorted
/// by session_id; comments carry 1-based sequence numbers.
IngestResult resolve_corpus(std::vector<RawSession> raw);

/// parse_corpus_csv followed by resolve_corpus.
IngestResult ingest_corpus(const std::filesystem::path& path);

}  // namespace sg
