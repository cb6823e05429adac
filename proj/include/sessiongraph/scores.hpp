#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sessiongraph/graph.hpp"

namespace sg {

/// Power-balance scores of one session: mean weighted out-degree minus
/// in-degree over the victim set and over the bully set.
struct SessionScores {
  std::string session_id;
  double victim_score = 0.0;
  std::optional<double> bully_score;  // absent when the session has no bullies
  int victim_count = 0;
  int bully_count = 0;
  int defender_count = 0;
  double victim_out = 0.0, victim_in = 0.0;
  double bully_out = 0.0, bully_in = 0.0;
  double defender_out = 0.0, defender_in = 0.0;
  int node_count = 0;
  int edge_count = 0;
};

/// Sign-pair classification of (victim_score, bully_score). Zero counts as
/// non-negative.
enum class Quadrant {
  QI,    // victim >= 0, bully >= 0: evenly matched
  QII,   // victim >= 0, bully < 0: victims and defenders dominate
  QIII,  // victim < 0, bully < 0: bullies face pushback
  QIV,   // victim < 0, bully >= 0: bullies dominate
};

std::string_view quadrant_name(Quadrant quadrant);
std::string_view quadrant_label(Quadrant quadrant);

double victim_score(const SessionGraph& graph);
std::optional<double> bully_score(const SessionGraph& graph);
SessionScores score_session(const SessionGraph& graph);

/// Throws Unclassifiable when bully_score is absent.
Quadrant quadrant(const SessionScores& scores);

struct CiConfig {
  int resamples = 10000;
  std::uint64_t seed = 1;
  double level = 0.95;
};

struct MetricStats {
  std::string name;
  std::size_t n = 0;
  double median = 0.0;
  double mean = 0.0;
  double ci_lower = 0.0;
  double ci_upper = 0.0;
};

/// Median, mean, and a seeded bootstrap percentile CI around the mean.
MetricStats summarize_metric(std::string name, std::span<const double> values,
                             const CiConfig& config);

/// Seeded bootstrap percentile interval for the mean.
std::pair<double, double> bootstrap_mean_ci(std::span<const double> values,
                                            const CiConfig& config);

struct HistogramBin {
  long index = 0;  // covers [index * width, (index + 1) * width)
  long long count = 0;
};

struct Histogram {
  double bin_width = 10.0;
  std::vector<HistogramBin> bins;
  long long negative = 0;
  long long nonnegative = 0;
};

Histogram histogram(std::span<const double> values, double bin_width);

/// Corpus-level summary. Bully-side metrics cover only sessions with at
/// least one bully; their exclusion count is reported.
struct CorpusStats {
  std::size_t sessions = 0;
  std::size_t sessions_without_bullies = 0;
  std::vector<MetricStats> metrics;
  Histogram victim_hist;
  Histogram bully_hist;
  std::array<std::size_t, 4> quadrant_counts{};
};

CorpusStats corpus_stats(std::span<const SessionScores> all, double bin_width,
                         const CiConfig& config);

}  // namespace sg
