#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "sessiongraph/annotations.hpp"
#include "sessiongraph/graph.hpp"
#include "sessiongraph/motifs.hpp"

namespace fixtures {

inline sg::ResolvedComment comment(std::string id, std::string author, std::int64_t ts,
                                   sg::Role role, double severity) {
  sg::ResolvedComment c;
  c.comment_id = std::move(id);
  c.session_id = "fix";
  c.author = std::move(author);
  c.timestamp = ts;
  c.role = role;
  c.severity = severity;
  return c;
}

/// Eight-comment session whose graph lands exactly on the published degree
/// fixture: victims (3.27,4.80) (3.20,1.80) (4.20,0), bullies (2,7.27)
/// (1,7.27) (3.60,2.40), nine nodes, eighteen edges.
inline sg::ResolvedSession degree_fixture_session() {
  sg::ResolvedSession session;
  session.session_id = "fixture-1";
  session.main_victim = sg::MainVictimLabel::Poster;
  session.comments = {
      comment("c1", "u1", 1, sg::Role::Bully, 2.00),
      comment("c2", "u2", 2, sg::Role::Bully, 1.00),
      comment("c3", "u3", 3, sg::Role::AggressiveDefender, 1.60),
      comment("c4", "u4", 4, sg::Role::AggressiveDefender, 1.67),
      comment("c5", "u5", 5, sg::Role::AggressiveVictim, 1.60),
      comment("c6", "u6", 6, sg::Role::Bully, 1.80),
      comment("c7", "u7", 7, sg::Role::AggressiveVictim, 1.40),
      comment("c8", "u8", 8, sg::Role::NonAggDefenderConfrontBully, 1.00),
  };
  for (std::size_t i = 0; i < session.comments.size(); ++i) {
    session.comments[i].sequence = static_cast<int>(i) + 1;
  }
  return session;
}

/// First k comments of the degree fixture.
inline sg::ResolvedSession degree_fixture_prefix(std::size_t k) {
  sg::ResolvedSession session = degree_fixture_session();
  session.comments.resize(k);
  return session;
}

inline const std::vector<sg::Role>& comment_roles() {
  static const std::vector<sg::Role> roles = {
      sg::Role::Bully,
      sg::Role::BullyAssistant,
      sg::Role::AggressiveVictim,
      sg::Role::NonAggressiveVictim,
      sg::Role::AggressiveDefender,
      sg::Role::NonAggDefenderSupportVictim,
      sg::Role::NonAggDefenderConfrontBully,
  };
  return roles;
}

/// Random resolved session: authors from a small pool so (user, role) pairs
/// repeat and edge weights accumulate.
inline sg::ResolvedSession random_session(std::mt19937_64& rng, std::string session_id,
                                          int max_comments = 30) {
  std::uniform_int_distribution<int> n_comments(0, max_comments);
  std::uniform_int_distribution<int> author(0, 9);
  std::uniform_int_distribution<std::size_t> role(0, comment_roles().size() - 1);
  std::uniform_real_distribution<double> severity(1.0, 3.0);
  std::uniform_int_distribution<int> step(0, 2);  // 0 keeps timestamps tied

  sg::ResolvedSession session;
  session.session_id = std::move(session_id);
  session.main_victim = sg::MainVictimLabel::Poster;
  std::int64_t ts = 1000;
  const int n = n_comments(rng);
  for (int i = 0; i < n; ++i) {
    ts += step(rng);
    session.comments.push_back(comment("c" + std::to_string(i), "u" + std::to_string(author(rng)),
                                       ts, comment_roles()[role(rng)], severity(rng)));
    session.comments.back().session_id = session.session_id;
    session.comments.back().sequence = i + 1;
  }
  return session;
}

/// Random simplified graph with the given undirected connection density;
/// each connected pair gets one or two directed bucketed edges.
inline sg::SimplifiedGraph random_simplified(std::mt19937_64& rng, int n, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> color(0, 2);
  std::uniform_int_distribution<int> bucket(1, 2);
  std::uniform_int_distribution<int> direction(0, 2);  // fwd, back, both

  sg::SimplifiedGraph graph = sg::SimplifiedGraph::of_size(n);
  for (int i = 0; i < n; ++i) graph.colors[i] = static_cast<sg::Color>(color(rng));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) >= density) continue;
      const int dir = direction(rng);
      if (dir != 1) graph.set_bucket(u, v, static_cast<sg::Bucket>(bucket(rng)));
      if (dir != 0) graph.set_bucket(v, u, static_cast<sg::Bucket>(bucket(rng)));
    }
  }
  return graph;
}

/// Random colored digraph of motif size (3 or 4); connectivity not enforced.
inline sg::SimplifiedGraph random_motif_candidate(std::mt19937_64& rng, int n) {
  return random_simplified(rng, n, 0.7);
}

struct CsvCorpusOptions {
  int sessions = 12;
  int max_comments = 8;
  int other_sessions = 2;  // sessions whose main-victim vote is Other
};

/// Writes an annotator-level corpus CSV for CLI round trips. Deterministic
/// for a fixed seed.
inline void write_csv_corpus(const std::filesystem::path& path, std::uint64_t seed,
                             const CsvCorpusOptions& options = {}) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_comments(1, options.max_comments);
  std::uniform_int_distribution<int> author(0, 7);
  std::uniform_int_distribution<std::size_t> role_index(0, comment_roles().size() - 1);
  std::uniform_int_distribution<int> bully_severity(1, 3);
  std::uniform_int_distribution<int> dissent(0, 4);
  std::uniform_int_distribution<int> vote(0, 2);

  const auto severity_string = [](int level) {
    return level == 1 ? "mild" : level == 2 ? "moderate" : "severe";
  };

  std::ofstream out(path);
  out << "record,session_id,comment_id,author,timestamp,annotator_id,is_bullying,role,"
         "severity,topics,main_victim\n";
  for (int s = 0; s < options.sessions; ++s) {
    const std::string session_id = "s" + std::to_string(100 + s);
    const int n = n_comments(rng);
    for (int c = 0; c < n; ++c) {
      const std::string comment_id = "c" + std::to_string(c);
      const std::string user = "u" + std::to_string(author(rng));
      const std::int64_t ts = 1000 + c * 10;
      const int draw = dissent(rng);
      if (draw == 4) {
        // unanimous bystander comment; dropped during consensus
        for (int a = 0; a < 5; ++a) {
          out << "comment," << session_id << "," << comment_id << "," << user << "," << ts
              << ",a" << a << ",false,passive_bystander,not_bullying,,\n";
        }
        continue;
      }
      const sg::Role role = comment_roles()[role_index(rng)];
      const bool bullying = sg::is_bullying_side(role);
      const int dissenters = draw == 0 ? 2 : draw == 1 ? 1 : 0;
      for (int a = 0; a < 5; ++a) {
        const bool minority = a >= 5 - dissenters;
        out << "comment," << session_id << "," << comment_id << "," << user << "," << ts << ",a"
            << a << ",";
        if (minority) {
          out << (bullying ? "false,passive_bystander,not_bullying"
                           : "true,bully,moderate");
        } else if (bullying) {
          out << "true," << sg::role_name(role) << "," << severity_string(bully_severity(rng));
        } else {
          out << "false," << sg::role_name(role) << ",not_bullying";
        }
        out << ",,\n";
      }
    }
    const bool other = s < options.other_sessions;
    for (int a = 0; a < 5; ++a) {
      out << "victim_vote," << session_id << ",,,,a" << a << ",,,,,";
      if (other) {
        out << "other";
      } else {
        const int v = vote(rng);
        out << (v == 0 ? "op" : v == 1 ? "picture" : "participants");
      }
      out << "\n";
    }
  }
}

}  // namespace fixtures
