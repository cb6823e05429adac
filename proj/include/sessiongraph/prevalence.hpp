#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sessiongraph/motifs.hpp"
#include "sessiongraph/scores.hpp"

namespace sg {

/// Motif census of one session.
struct SessionCensus {
  std::string session_id;
  MotifCount counts;

  long long total() const;
};

/// Fraction of sessions in scope where the motif appears at least once.
/// Throws EmptyScope on an empty session set.
double global_prevalence(const MotifKey& key, std::span<const SessionCensus> scope);

/// Mean per-session relative frequency of the motif; sessions with an empty
/// census contribute 0 but stay in the denominator. Throws EmptyScope.
double local_prevalence(const MotifKey& key, std::span<const SessionCensus> scope);

struct PrevalenceRow {
  MotifKey key;
  double p_global = 0.0;
  double p_local = 0.0;
  int rank_global = 0;   // dense, 1 = highest prevalence
  int rank_local = 0;
  long long rank_product = 0;
};

struct PrevalenceTable {
  std::string scope;  // "all" or a quadrant name
  std::size_t session_count = 0;
  std::vector<PrevalenceRow> rows;
};

/// Dense-ranks both prevalence columns (descending) and orders rows by
/// ascending rank product; ties break by p_global desc, p_local desc, key asc.
void rank_motifs(PrevalenceTable& table);

/// Prevalence of every motif appearing anywhere in scope, fully ranked.
PrevalenceTable build_prevalence(std::span<const SessionCensus> scope, std::string scope_name);

/// Sessions of one quadrant; entries without a quadrant label are skipped.
/// Throws EmptyScope when the quadrant holds no sessions.
std::vector<SessionCensus> scope_by_quadrant(std::span<const SessionCensus> censuses,
                                             std::span<const std::optional<Quadrant>> quadrants,
                                             Quadrant which);

}  // namespace sg
