#include "sessiongraph/prevalence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sessiongraph/errors.hpp"

namespace sg {

long long SessionCensus::total() const {
  long long sum = 0;
  for (const auto& [key, count] : counts) sum += count;
  return sum;
}

namespace {

long long count_of(const SessionCensus& census, const MotifKey& key) {
  const auto it = census.counts.find(key);
  return it == census.counts.end() ? 0 : it->second;
}

void require_scope(std::span<const SessionCensus> scope) {
  if (scope.empty()) throw EmptyScope("prevalence over an empty session set");
}

/// Dense ranks for values sorted descending: equal values share a rank and
/// the next distinct value takes the next integer.
std::map<double, int, std::greater<double>> dense_ranks(const std::vector<double>& values) {
  std::map<double, int, std::greater<double>> ranks;
  for (double v : values) ranks[v] = 0;
  int next = 1;
  for (auto& [value, rank] : ranks) rank = next++;
  return ranks;
}

}  // namespace

double global_prevalence(const MotifKey& key, std::span<const SessionCensus> scope) {
  require_scope(scope);
  std::size_t present = 0;
  for (const SessionCensus& census : scope) {
    if (count_of(census, key) > 0) ++present;
  }
  return static_cast<double>(present) / static_cast<double>(scope.size());
}

double local_prevalence(const MotifKey& key, std::span<const SessionCensus> scope) {
  require_scope(scope);
  double sum = 0.0;
  for (const SessionCensus& census : scope) {
    const long long total = census.total();
    if (total > 0) {
      sum += static_cast<double>(count_of(census, key)) / static_cast<double>(total);
    }
  }
  return sum / static_cast<double>(scope.size());
}

void rank_motifs(PrevalenceTable& table) {
  std::vector<double> globals, locals;
  globals.reserve(table.rows.size());
  locals.reserve(table.rows.size());
  for (const PrevalenceRow& row : table.rows) {
    globals.push_back(row.p_global);
    locals.push_back(row.p_local);
  }
  const auto global_rank = dense_ranks(globals);
  const auto local_rank = dense_ranks(locals);
  for (PrevalenceRow& row : table.rows) {
    row.rank_global = global_rank.at(row.p_global);
    row.rank_local = local_rank.at(row.p_local);
    row.rank_product = static_cast<long long>(row.rank_global) * row.rank_local;
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const PrevalenceRow& a, const PrevalenceRow& b) {
              if (a.rank_product != b.rank_product) return a.rank_product < b.rank_product;
              if (a.p_global != b.p_global) return a.p_global > b.p_global;
              if (a.p_local != b.p_local) return a.p_local > b.p_local;
              return a.key < b.key;
            });
}

PrevalenceTable build_prevalence(std::span<const SessionCensus> scope, std::string scope_name) {
  require_scope(scope);
  PrevalenceTable table;
  table.scope = std::move(scope_name);
  table.session_count = scope.size();

  std::set<MotifKey> keys;
  for (const SessionCensus& census : scope) {
    for (const auto& [key, count] : census.counts) {
      if (count > 0) keys.insert(key);
    }
  }
  for (const MotifKey& key : keys) {
    PrevalenceRow row;
    row.key = key;
    row.p_global = global_prevalence(key, scope);
    row.p_local = local_prevalence(key, scope);
    table.rows.push_back(row);
  }
  rank_motifs(table);
  return table;
}

std::vector<SessionCensus> scope_by_quadrant(std::span<const SessionCensus> censuses,
                                             std::span<const std::optional<Quadrant>> quadrants,
                                             Quadrant which) {
  if (censuses.size() != quadrants.size()) {
    throw Internal("scope_by_quadrant: mismatched spans");
  }
  std::vector<SessionCensus> scope;
  for (std::size_t i = 0; i < censuses.size(); ++i) {
    if (quadrants[i] && *quadrants[i] == which) scope.push_back(censuses[i]);
  }
  if (scope.empty()) {
    throw EmptyScope("no sessions in quadrant " + std::string(quadrant_name(which)));
  }
  return scope;
}

}  // namespace sg
