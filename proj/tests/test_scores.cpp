#include <doctest.h>

#include <cmath>
#include <random>

#include "sessiongraph/errors.hpp"
#include "sessiongraph/scores.hpp"
#include "support/fixtures.hpp"

using sg::Quadrant;
using sg::Role;
using sg::SessionGraph;
using sg::SessionScores;

TEST_CASE("fixture graph lands on the published scores") {
  const SessionGraph graph = sg::build_graph(fixtures::degree_fixture_session());
  const SessionScores scores = sg::score_session(graph);
  // victims: (3.27-4.80) + (3.20-1.80) + (4.20-0) over 3 nodes; the figure
  // labels truncate to two decimals (+1.35 / -3.44)
  CHECK(scores.victim_score == doctest::Approx(4.07 / 3.0).epsilon(1e-12));
  REQUIRE(scores.bully_score.has_value());
  CHECK(*scores.bully_score == doctest::Approx(-10.34 / 3.0).epsilon(1e-12));
  CHECK(std::trunc(scores.victim_score * 100.0) / 100.0 == doctest::Approx(1.35));
  CHECK(std::trunc(*scores.bully_score * 100.0) / 100.0 == doctest::Approx(-3.44));
  CHECK(scores.victim_count == 3);
  CHECK(scores.bully_count == 3);
  CHECK(scores.defender_count == 3);
  CHECK(sg::quadrant(scores) == Quadrant::QII);
}

TEST_CASE("degenerate score cases") {
  const SessionGraph sentinel_only = sg::build_graph({"s", sg::MainVictimLabel::Poster, {}});
  CHECK(sg::victim_score(sentinel_only) == 0.0);
  CHECK_FALSE(sg::bully_score(sentinel_only).has_value());

  SessionGraph graph("s");
  graph.add_node({std::string(sg::kMainVictimUser), Role::MainVictim});
  graph.add_node({"b", Role::Bully});
  graph.add_edge(1, 0, 2.0);
  CHECK(sg::victim_score(graph) == -2.0);
  CHECK(sg::bully_score(graph) == 2.0);

  SessionGraph lone_victim("s");
  lone_victim.add_node({std::string(sg::kMainVictimUser), Role::MainVictim});
  lone_victim.add_node({"b", Role::Bully});
  lone_victim.add_edge(1, 0, 5.0);
  CHECK(sg::victim_score(lone_victim) == -5.0);
}

TEST_CASE("quadrant classification follows the sign pair") {
  const auto classify = [](double victim, std::optional<double> bully) {
    SessionScores scores;
    scores.session_id = "s";
    scores.victim_score = victim;
    scores.bully_score = bully;
    if (bully) scores.bully_count = 1;
    return sg::quadrant(scores);
  };
  CHECK(classify(1.35, -3.44) == Quadrant::QII);
  CHECK(classify(0.0, 0.0) == Quadrant::QI);  // zero counts as non-negative
  CHECK(classify(-8.98, 1.33) == Quadrant::QIV);
  CHECK(classify(2.0, 3.0) == Quadrant::QI);
  CHECK(classify(-1.0, -1.0) == Quadrant::QIII);
  CHECK_THROWS_AS(classify(1.0, std::nullopt), sg::Unclassifiable);
}

TEST_CASE("quadrant is invariant under positive rescaling") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  std::uniform_real_distribution<double> scale(0.01, 50.0);
  for (int trial = 0; trial < 50; ++trial) {
    SessionScores scores;
    scores.victim_score = value(rng);
    scores.bully_score = value(rng);
    SessionScores rescaled = scores;
    const double factor = scale(rng);
    rescaled.victim_score *= factor;
    *rescaled.bully_score *= factor;
    CHECK(sg::quadrant(scores) == sg::quadrant(rescaled));
  }
}

TEST_CASE("a bully comment lowers the victim score by k*w / |V|") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    sg::ResolvedSession session = fixtures::random_session(rng, "s");
    const SessionGraph before = sg::build_graph(session);
    const SessionScores before_scores = sg::score_session(before);

    const double w = 1.5;
    session.comments.push_back(
        fixtures::comment("extra", "fresh_bully", 1'000'000, Role::Bully, w));
    const SessionGraph after = sg::build_graph(session);
    const SessionScores after_scores = sg::score_session(after);

    const int k = before_scores.victim_count;  // victim set is unchanged
    REQUIRE(after_scores.victim_count == k);
    CHECK(after_scores.victim_in ==
          doctest::Approx(before_scores.victim_in + k * w).epsilon(1e-12));
    CHECK(after_scores.victim_score <= before_scores.victim_score);
  }
}

TEST_CASE("summary statistics match simple oracles") {
  const sg::CiConfig config{1000, 77, 0.95};

  SUBCASE("median and mean of 1,2,3") {
    const std::vector<double> values = {1.0, 2.0, 3.0};
    const sg::MetricStats stats = sg::summarize_metric("toy", values, config);
    CHECK(stats.median == 2.0);
    CHECK(stats.mean == 2.0);
    CHECK(stats.ci_lower <= stats.mean);
    CHECK(stats.mean <= stats.ci_upper);
  }

  SUBCASE("even-length median averages the middle pair") {
    const std::vector<double> values = {4.0, 1.0, 3.0, 2.0};
    CHECK(sg::summarize_metric("toy", values, config).median == 2.5);
  }

  SUBCASE("constant sample collapses the interval") {
    const std::vector<double> values(25, 3.25);
    const sg::MetricStats stats = sg::summarize_metric("toy", values, config);
    CHECK(stats.ci_lower == 3.25);
    CHECK(stats.ci_upper == 3.25);
  }

  SUBCASE("identical seeds reproduce identical intervals") {
    std::vector<double> values;
    std::mt19937_64 rng(3);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int i = 0; i < 50; ++i) values.push_back(normal(rng));
    const auto a = sg::bootstrap_mean_ci(values, config);
    const auto b = sg::bootstrap_mean_ci(values, config);
    CHECK(a == b);
  }
}

TEST_CASE("bootstrap interval covers a known mean in most seeded trials") {
  // 100 draws per trial from N(5, 2); the nominal 95% interval must cover
  // the true mean in at least 90 of 100 trials.
  int covered = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::mt19937_64 rng(1000 + trial);
    std::normal_distribution<double> normal(5.0, 2.0);
    std::vector<double> sample;
    for (int i = 0; i < 100; ++i) sample.push_back(normal(rng));
    const auto [lo, hi] = sg::bootstrap_mean_ci(sample, {1000, 42 + trial, 0.95});
    if (lo <= 5.0 && 5.0 <= hi) ++covered;
  }
  CHECK(covered >= 90);
}

TEST_CASE("histograms partition by sign and cover every session") {
  const std::vector<double> values = {-25.0, -10.0, -0.01, 0.0, 3.0, 9.99, 10.0, 107.0};
  const sg::Histogram hist = sg::histogram(values, 10.0);
  long long total = 0;
  for (const auto& bin : hist.bins) total += bin.count;
  CHECK(total == static_cast<long long>(values.size()));
  CHECK(hist.negative == 3);
  CHECK(hist.nonnegative == 5);

  // -10 sits in [-10, 0); 0 and 9.99 in [0, 10); 10 in [10, 20)
  const auto count_at = [&](long index) {
    for (const auto& bin : hist.bins) {
      if (bin.index == index) return bin.count;
    }
    return 0LL;
  };
  CHECK(count_at(-3) == 1);  // -25
  CHECK(count_at(-1) == 2);  // -10, -0.01
  CHECK(count_at(0) == 3);   // 0, 3, 9.99
  CHECK(count_at(1) == 1);   // 10
  CHECK(count_at(10) == 1);  // 107
  CHECK_THROWS_AS(sg::histogram(values, 0.0), sg::Error);
}

TEST_CASE("corpus stats exclude bully-less sessions from bully aggregates") {
  std::vector<SessionScores> all;
  const auto make = [&](double victim, std::optional<double> bully) {
    SessionScores scores;
    scores.session_id = "s" + std::to_string(all.size());
    scores.victim_score = victim;
    scores.bully_score = bully;
    scores.victim_count = 1;
    scores.bully_count = bully ? 2 : 0;
    scores.node_count = 3;
    scores.edge_count = 2;
    all.push_back(scores);
  };
  make(5.0, 1.0);    // QI
  make(5.0, -1.0);   // QII
  make(-5.0, -1.0);  // QIII
  make(-5.0, 1.0);   // QIV
  make(-5.0, 2.0);   // QIV
  make(1.0, std::nullopt);

  const sg::CorpusStats stats = sg::corpus_stats(all, 10.0, {200, 9});
  CHECK(stats.sessions == 6);
  CHECK(stats.sessions_without_bullies == 1);
  CHECK(stats.quadrant_counts[0] == 1);
  CHECK(stats.quadrant_counts[1] == 1);
  CHECK(stats.quadrant_counts[2] == 1);
  CHECK(stats.quadrant_counts[3] == 2);

  for (const sg::MetricStats& metric : stats.metrics) {
    if (metric.name.rfind("bully", 0) == 0) {
      CHECK(metric.n == 5);
    } else {
      CHECK(metric.n == 6);
    }
    CHECK(metric.ci_lower <= metric.mean + 1e-12);
    CHECK(metric.mean <= metric.ci_upper + 1e-12);
  }
  CHECK(stats.victim_hist.negative + stats.victim_hist.nonnegative == 6);
  CHECK(stats.bully_hist.negative + stats.bully_hist.nonnegative == 5);
  CHECK_THROWS_AS(sg::corpus_stats({}, 10.0, {200, 9}), sg::Error);
}

TEST_CASE("degree-sum identity ties the three role sets together") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const SessionGraph graph =
        sg::build_graph(fixtures::random_session(rng, "s" + std::to_string(trial)));
    const SessionScores scores = sg::score_session(graph);
    const double defender_net = scores.defender_out - scores.defender_in;
    const double bully_part =
        scores.bully_score ? *scores.bully_score * scores.bully_count : 0.0;
    const double total = scores.victim_score * scores.victim_count + bully_part + defender_net;
    CHECK(std::abs(total) < 1e-9);
  }
}
