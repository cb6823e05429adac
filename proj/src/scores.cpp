#include "sessiongraph/scores.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "sessiongraph/errors.hpp"

namespace sg {
namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t hash = 1469598103934665603ull;
  for (char c : name) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  return seed ^ hash;
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

double mean_of(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

/// Linear-interpolation quantile over a sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

}  // namespace

std::string_view quadrant_name(Quadrant quadrant) {
  switch (quadrant) {
    case Quadrant::QI: return "QI";
    case Quadrant::QII: return "QII";
    case Quadrant::QIII: return "QIII";
    case Quadrant::QIV: return "QIV";
  }
  throw Internal("quadrant_name: bad quadrant");
}

std::string_view quadrant_label(Quadrant quadrant) {
  switch (quadrant) {
    case Quadrant::QI: return "evenly matched";
    case Quadrant::QII: return "victims and defenders dominate";
    case Quadrant::QIII: return "bullies face pushback";
    case Quadrant::QIV: return "bullies dominate";
  }
  throw Internal("quadrant_label: bad quadrant");
}

SessionScores score_session(const SessionGraph& graph) {
  const RoleSets sets = role_sets(graph);
  SessionScores scores;
  scores.session_id = graph.session_id();
  scores.victim_count = static_cast<int>(sets.victims.size());
  scores.bully_count = static_cast<int>(sets.bullies.size());
  scores.defender_count = static_cast<int>(sets.defenders.size());
  scores.node_count = static_cast<int>(graph.node_count());
  scores.edge_count = static_cast<int>(graph.edge_count());

  for (int v : sets.victims) {
    scores.victim_out += graph.weighted_out_degree(v);
    scores.victim_in += graph.weighted_in_degree(v);
  }
  for (int b : sets.bullies) {
    scores.bully_out += graph.weighted_out_degree(b);
    scores.bully_in += graph.weighted_in_degree(b);
  }
  for (int d : sets.defenders) {
    scores.defender_out += graph.weighted_out_degree(d);
    scores.defender_in += graph.weighted_in_degree(d);
  }

  if (sets.victims.empty()) {
    throw Internal("session graph without a victim set");  // sentinel guarantees one
  }
  scores.victim_score = (scores.victim_out - scores.victim_in) / scores.victim_count;
  if (scores.bully_count > 0) {
    scores.bully_score = (scores.bully_out - scores.bully_in) / scores.bully_count;
  }
  return scores;
}

double victim_score(const SessionGraph& graph) { return score_session(graph).victim_score; }

std::optional<double> bully_score(const SessionGraph& graph) {
  return score_session(graph).bully_score;
}

Quadrant quadrant(const SessionScores& scores) {
  if (!scores.bully_score) {
    throw Unclassifiable("session '" + scores.session_id + "' has no bully score");
  }
  const bool victim_nonneg = scores.victim_score >= 0.0;
  const bool bully_nonneg = *scores.bully_score >= 0.0;
  if (victim_nonneg) return bully_nonneg ? Quadrant::QI : Quadrant::QII;
  return bully_nonneg ? Quadrant::QIV : Quadrant::QIII;
}

std::pair<double, double> bootstrap_mean_ci(std::span<const double> values,
                                            const CiConfig& config) {
  if (values.empty()) throw Error("bootstrap over an empty sample");
  if (config.resamples < 1) throw Error("bootstrap needs at least one resample");
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);

  std::vector<double> means;
  means.reserve(config.resamples);
  for (int r = 0; r < config.resamples; ++r) {
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) sum += values[pick(rng)];
    means.push_back(sum / static_cast<double>(values.size()));
  }
  std::sort(means.begin(), means.end());
  const double alpha = (1.0 - config.level) / 2.0;
  return {quantile_sorted(means, alpha), quantile_sorted(means, 1.0 - alpha)};
}

MetricStats summarize_metric(std::string name, std::span<const double> values,
                             const CiConfig& config) {
  if (values.empty()) throw Error("metric '" + name + "' has no values");
  MetricStats stats;
  stats.n = values.size();
  stats.median = median_of({values.begin(), values.end()});
  stats.mean = mean_of(values);
  CiConfig per_metric = config;
  per_metric.seed = mix_seed(config.seed, name);
  std::tie(stats.ci_lower, stats.ci_upper) = bootstrap_mean_ci(values, per_metric);
  stats.name = std::move(name);
  return stats;
}

Histogram histogram(std::span<const double> values, double bin_width) {
  if (bin_width <= 0.0) throw Error("histogram bin width must be positive");
  Histogram hist;
  hist.bin_width = bin_width;
  std::map<long, long long> bins;
  for (double v : values) {
    ++bins[static_cast<long>(std::floor(v / bin_width))];
    if (v < 0.0) ++hist.negative;
    else ++hist.nonnegative;
  }
  for (const auto& [index, count] : bins) hist.bins.push_back({index, count});
  return hist;
}

CorpusStats corpus_stats(std::span<const SessionScores> all, double bin_width,
                         const CiConfig& config) {
  if (all.empty()) throw Error("corpus_stats over an empty session list");
  CorpusStats stats;
  stats.sessions = all.size();

  std::vector<double> nodes, edges;
  std::vector<double> victim_counts, victim_outs, victim_ins, victim_scores;
  std::vector<double> bully_counts, bully_outs, bully_ins, bully_scores;
  for (const SessionScores& s : all) {
    nodes.push_back(s.node_count);
    edges.push_back(s.edge_count);
    victim_counts.push_back(s.victim_count);
    victim_outs.push_back(s.victim_count > 0 ? s.victim_out / s.victim_count : 0.0);
    victim_ins.push_back(s.victim_count > 0 ? s.victim_in / s.victim_count : 0.0);
    victim_scores.push_back(s.victim_score);
    if (s.bully_score) {
      bully_counts.push_back(s.bully_count);
      bully_outs.push_back(s.bully_out / s.bully_count);
      bully_ins.push_back(s.bully_in / s.bully_count);
      bully_scores.push_back(*s.bully_score);
      ++stats.quadrant_counts[static_cast<std::size_t>(quadrant(s))];
    } else {
      ++stats.sessions_without_bullies;
    }
  }

  stats.metrics.push_back(summarize_metric("nodes", nodes, config));
  stats.metrics.push_back(summarize_metric("edges", edges, config));
  stats.metrics.push_back(summarize_metric("victim_count", victim_counts, config));
  stats.metrics.push_back(summarize_metric("victim_avg_weighted_out_degree", victim_outs, config));
  stats.metrics.push_back(summarize_metric("victim_avg_weighted_in_degree", victim_ins, config));
  stats.metrics.push_back(summarize_metric("victim_score", victim_scores, config));
  if (!bully_scores.empty()) {
    stats.metrics.push_back(summarize_metric("bully_count", bully_counts, config));
    stats.metrics.push_back(summarize_metric("bully_avg_weighted_out_degree", bully_outs, config));
    stats.metrics.push_back(summarize_metric("bully_avg_weighted_in_degree", bully_ins, config));
    stats.metrics.push_back(summarize_metric("bully_score", bully_scores, config));
  }

  stats.victim_hist = histogram(victim_scores, bin_width);
  if (!bully_scores.empty()) stats.bully_hist = histogram(bully_scores, bin_width);
  stats.bully_hist.bin_width = bin_width;
  return stats;
}

}  // namespace sg
