#include "sessiongraph/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sessiongraph/errors.hpp"
#include "sessiongraph/graph_io.hpp"

namespace sg {
namespace {

using nlohmann::json;

std::string fmt(double value, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
  return buf;
}

std::string percent(std::size_t part, std::size_t whole) {
  if (whole == 0) return "0.0%";
  return fmt(100.0 * static_cast<double>(part) / static_cast<double>(whole), 1) + "%";
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("write failed: " + path.string());
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  write_text_file(path, doc.dump(2) + "\n");
}

json stats_to_json(const IngestStats& stats) {
  return {{"sessions_total", stats.sessions_total},
          {"sessions_retained", stats.sessions_retained},
          {"sessions_excluded_other", stats.sessions_excluded_other},
          {"sessions_skipped_no_votes", stats.sessions_skipped_no_votes},
          {"comments_total", stats.comments_total},
          {"comments_dropped_bystander", stats.comments_dropped_bystander},
          {"warnings", stats.warnings}};
}

IngestStats stats_from_json(const json& doc) {
  IngestStats stats;
  stats.sessions_total = doc.at("sessions_total").get<std::size_t>();
  stats.sessions_retained = doc.at("sessions_retained").get<std::size_t>();
  stats.sessions_excluded_other = doc.at("sessions_excluded_other").get<std::size_t>();
  stats.sessions_skipped_no_votes = doc.at("sessions_skipped_no_votes").get<std::size_t>();
  stats.comments_total = doc.at("comments_total").get<std::size_t>();
  stats.comments_dropped_bystander = doc.at("comments_dropped_bystander").get<std::size_t>();
  stats.warnings = doc.at("warnings").get<std::vector<std::string>>();
  return stats;
}

constexpr Quadrant kQuadrants[] = {Quadrant::QI, Quadrant::QII, Quadrant::QIII, Quadrant::QIV};

std::string prevalence_csv(const PrevalenceTable& table, const FileStamp& stamp) {
  std::string out = stamp.comment_line("motif-prevalence") + "\n";
  out += "# scope=" + table.scope + " sessions=" + std::to_string(table.session_count) + "\n";
  out += "motif_key,p_global,p_local,rank_global,rank_local,rank_product\n";
  for (const PrevalenceRow& row : table.rows) {
    out += row.key.hex() + "," + fmt(row.p_global) + "," + fmt(row.p_local) + "," +
           std::to_string(row.rank_global) + "," + std::to_string(row.rank_local) + "," +
           std::to_string(row.rank_product) + "\n";
  }
  return out;
}

std::string histogram_csv(const Histogram& hist, const FileStamp& stamp) {
  std::string out = stamp.comment_line("score-histogram") + "\n";
  out += "bin_start,bin_end,count\n";
  for (const HistogramBin& bin : hist.bins) {
    out += fmt(bin.index * hist.bin_width, 2) + "," + fmt((bin.index + 1) * hist.bin_width, 2) +
           "," + std::to_string(bin.count) + "\n";
  }
  return out;
}

void append_prevalence_text(std::ostringstream& out, const PrevalenceTable& table, int k) {
  out << "rank  motif_key           p_global  p_local  rg  rl  product\n";
  int rank = 0;
  for (const PrevalenceRow& row : table.rows) {
    if (++rank > k) break;
    char line[160];
    std::snprintf(line, sizeof(line), "%-5d %-19s %8.4f %8.4f %3d %3d %8lld\n", rank,
                  row.key.hex().c_str(), row.p_global, row.p_local, row.rank_global,
                  row.rank_local, static_cast<long long>(row.rank_product));
    out << line;
  }
}

}  // namespace

std::string config_hash(const RunConfig& config) {
  std::string canonical = "schema=" + std::to_string(kSchemaVersion) +
                          ";seed=" + std::to_string(config.seed) +
                          ";bin_width=" + fmt(config.bin_width, 6) +
                          ";resamples=" + std::to_string(config.resamples) +
                          ";topk_global=" + std::to_string(config.topk_global) +
                          ";topk_quadrant=" + std::to_string(config.topk_quadrant);
  return to_hex64(fnv1a64(canonical));
}

FileStamp stamp_for(const RunConfig& config) {
  return FileStamp{kSchemaVersion, config_hash(config)};
}

void write_resolved_corpus(const std::filesystem::path& path, const IngestResult& corpus,
                           const FileStamp& stamp) {
  json doc;
  doc["kind"] = "resolved_corpus";
  doc["schema_version"] = stamp.schema_version;
  doc["config_hash"] = stamp.config_hash;
  doc["stats"] = stats_to_json(corpus.stats);
  doc["sessions"] = json::array();
  for (const ResolvedSession& session : corpus.sessions) {
    json comments = json::array();
    for (const ResolvedComment& comment : session.comments) {
      comments.push_back({{"comment_id", comment.comment_id},
                          {"author", comment.author},
                          {"timestamp", comment.timestamp},
                          {"role", std::string(role_name(comment.role))},
                          {"severity", comment.severity},
                          {"sequence", comment.sequence}});
    }
    doc["sessions"].push_back({{"session_id", session.session_id},
                               {"main_victim", std::string(main_victim_name(session.main_victim))},
                               {"comments", std::move(comments)}});
  }
  write_json_file(path, doc);
}

IngestResult read_resolved_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open resolved corpus: " + path.string());
  json doc;
  try {
    in >> doc;
    if (doc.at("kind").get<std::string>() != "resolved_corpus") {
      throw ParseError(path.string() + " is not a resolved corpus");
    }
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw ParseError(path.string() + ": unsupported schema version");
    }
    IngestResult result;
    result.stats = stats_from_json(doc.at("stats"));
    for (const auto& entry : doc.at("sessions")) {
      ResolvedSession session;
      session.session_id = entry.at("session_id").get<std::string>();
      session.main_victim = parse_main_victim(entry.at("main_victim").get<std::string>());
      if (session.main_victim == MainVictimLabel::Other) {
        throw ParseError("session '" + session.session_id + "': other-victim sessions are "
                         "excluded before this stage");
      }
      for (const auto& item : entry.at("comments")) {
        ResolvedComment comment;
        comment.comment_id = item.at("comment_id").get<std::string>();
        comment.session_id = session.session_id;
        comment.author = item.at("author").get<std::string>();
        comment.timestamp = item.at("timestamp").get<std::int64_t>();
        comment.role = parse_role(item.at("role").get<std::string>());
        comment.severity = item.at("severity").get<double>();
        comment.sequence = item.at("sequence").get<int>();
        if (comment.role == Role::PassiveBystander || comment.role == Role::MainVictim) {
          throw ParseError("session '" + session.session_id + "': role '" +
                           std::string(role_name(comment.role)) + "' is not a resolved role");
        }
        if (comment.severity < 1.0 || comment.severity > 3.0) {
          throw ParseError("session '" + session.session_id + "': severity out of [1, 3]");
        }
        if (comment.sequence != static_cast<int>(session.comments.size()) + 1) {
          throw ParseError("session '" + session.session_id + "': comments out of sequence");
        }
        session.comments.push_back(std::move(comment));
      }
      result.sessions.push_back(std::move(session));
    }
    return result;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": bad resolved corpus: " + e.what());
  }
}

AnalysisResult analyze_corpus(std::span<const ResolvedSession> sessions,
                              const RunConfig& config) {
  AnalysisResult result;
  for (const ResolvedSession& session : sessions) {
    const SessionGraph graph = build_graph(session);
    SessionAnalysis analysis;
    analysis.scores = score_session(graph);
    if (analysis.scores.bully_score) analysis.quad = quadrant(analysis.scores);
    analysis.census.session_id = session.session_id;
    analysis.census.counts = enumerate_motifs(simplify(graph));
    result.sessions.push_back(std::move(analysis));
  }
  if (result.sessions.empty()) return result;

  std::vector<SessionScores> scores;
  std::vector<SessionCensus> censuses;
  std::vector<std::optional<Quadrant>> quads;
  for (const SessionAnalysis& analysis : result.sessions) {
    scores.push_back(analysis.scores);
    censuses.push_back(analysis.census);
    quads.push_back(analysis.quad);
  }
  result.stats = corpus_stats(scores, config.bin_width, {config.resamples, config.seed});

  bool any_motifs = false;
  for (const SessionCensus& census : censuses) any_motifs |= !census.counts.empty();
  if (any_motifs) {
    result.all_motifs = build_prevalence(censuses, "all");
    for (Quadrant q : kQuadrants) {
      try {
        const auto scope = scope_by_quadrant(censuses, quads, q);
        result.quadrant_motifs.emplace(q, build_prevalence(scope, std::string(quadrant_name(q))));
      } catch (const EmptyScope&) {
        // quadrant without sessions: no table
      }
    }
  }
  return result;
}

std::string ingest_summary(const IngestStats& stats) {
  std::ostringstream out;
  out << "retained " << stats.sessions_retained << " of " << stats.sessions_total << " sessions";
  out << " (" << stats.sessions_excluded_other << " other-victim excluded, "
      << stats.sessions_skipped_no_votes << " without votes skipped); ";
  out << stats.comments_total << " comments, " << stats.comments_dropped_bystander
      << " bystander comments dropped";
  return out.str();
}

IngestResult run_ingest(const RunConfig& config) {
  if (config.format != "csv") {
    throw ParseError("unsupported corpus format '" + config.format + "' (want csv)");
  }
  IngestResult corpus = ingest_corpus(config.input);
  std::filesystem::create_directories(config.outdir);
  write_resolved_corpus(config.outdir / "resolved.json", corpus, stamp_for(config));
  return corpus;
}


std::string run_analyze(const RunConfig& config) {
  const IngestResult corpus = read_resolved_corpus(config.input);
  const AnalysisResult analysis = analyze_corpus(corpus.sessions, config);
  const FileStamp stamp = stamp_for(config);
  std::filesystem::create_directories(config.outdir);

  // scores.csv
  {
    std::string out = stamp.comment_line("session-scores") + "\n";
    out += "session_id,victim_score,bully_score,quadrant,victim_count,bully_count,"
           "defender_count,node_count,edge_count,victim_out,victim_in,bully_out,bully_in,"
           "defender_out,defender_in\n";
    for (const SessionAnalysis& s : analysis.sessions) {
      const SessionScores& sc = s.scores;
      out += sc.session_id + "," + fmt(sc.victim_score) + ",";
      out += sc.bully_score ? fmt(*sc.bully_score) : std::string();
      out += ",";
      out += s.quad ? std::string(quadrant_name(*s.quad)) : std::string();
      out += "," + std::to_string(sc.victim_count) + "," + std::to_string(sc.bully_count) + "," +
             std::to_string(sc.defender_count) + "," + std::to_string(sc.node_count) + "," +
             std::to_string(sc.edge_count) + "," + fmt(sc.victim_out) + "," + fmt(sc.victim_in) +
             "," + fmt(sc.bully_out) + "," + fmt(sc.bully_in) + "," + fmt(sc.defender_out) + "," +
             fmt(sc.defender_in) + "\n";
    }
    write_text_file(config.outdir / "scores.csv", out);
  }

  // scatter.csv: (bully, victim) points of classified sessions
  {
    std::string out = stamp.comment_line("score-scatter") + "\n";
    out += "session_id,bully_score,victim_score,quadrant\n";
    for (const SessionAnalysis& s : analysis.sessions) {
      if (!s.quad) continue;
      out += s.scores.session_id + "," + fmt(*s.scores.bully_score) + "," +
             fmt(s.scores.victim_score) + "," + std::string(quadrant_name(*s.quad)) + "\n";
    }
    write_text_file(config.outdir / "scatter.csv", out);
  }

  // census.csv
  {
    std::string out = stamp.comment_line("motif-census") + "\n";
    out += "session_id,motif_key,count\n";
    for (const SessionAnalysis& s : analysis.sessions) {
      for (const auto& [key, count] : s.census.counts) {
        out += s.census.session_id + "," + key.hex() + "," + std::to_string(count) + "\n";
      }
    }
    write_text_file(config.outdir / "census.csv", out);
  }

  // prevalence tables
  if (analysis.all_motifs) {
    write_text_file(config.outdir / "motifs_all.csv", prevalence_csv(*analysis.all_motifs, stamp));
  }
  for (const auto& [q, table] : analysis.quadrant_motifs) {
    write_text_file(config.outdir / ("motifs_" + std::string(quadrant_name(q)) + ".csv"),
                    prevalence_csv(table, stamp));
  }

  // histograms
  if (analysis.stats) {
    write_text_file(config.outdir / "victim_score_hist.csv",
                    histogram_csv(analysis.stats->victim_hist, stamp));
    write_text_file(config.outdir / "bully_score_hist.csv",
                    histogram_csv(analysis.stats->bully_hist, stamp));
  }

  // stats.json
  {
    json doc;
    doc["kind"] = "corpus_stats";
    doc["schema_version"] = stamp.schema_version;
    doc["config_hash"] = stamp.config_hash;
    doc["ingest"] = stats_to_json(corpus.stats);
    doc["sessions_analyzed"] = analysis.sessions.size();
    if (analysis.stats) {
      const CorpusStats& cs = *analysis.stats;
      doc["sessions_without_bullies"] = cs.sessions_without_bullies;
      doc["metrics"] = json::array();
      for (const MetricStats& m : cs.metrics) {
        doc["metrics"].push_back({{"name", m.name},
                                  {"n", m.n},
                                  {"median", m.median},
                                  {"mean", m.mean},
                                  {"ci95_lower", m.ci_lower},
                                  {"ci95_upper", m.ci_upper}});
      }
      doc["quadrant_counts"] = json::object();
      for (std::size_t i = 0; i < 4; ++i) {
        doc["quadrant_counts"][std::string(quadrant_name(kQuadrants[i]))] = cs.quadrant_counts[i];
      }
      doc["victim_score_signs"] = {{"negative", cs.victim_hist.negative},
                                   {"nonnegative", cs.victim_hist.nonnegative}};
      doc["bully_score_signs"] = {{"negative", cs.bully_hist.negative},
                                  {"nonnegative", cs.bully_hist.nonnegative}};
    }
    write_json_file(config.outdir / "stats.json", doc);
  }

  // optional per-session graph exports
  if (config.dump_graphs) {
    const std::filesystem::path dir = config.outdir / "graphs";
    std::filesystem::create_directories(dir);
    for (const ResolvedSession& session : corpus.sessions) {
      const SessionGraph graph = build_graph(session);
      if (config.export_dot) {
        write_text_file(dir / (session.session_id + ".dot"), graph_to_dot(graph, stamp));
      }
      if (config.export_graphml) {
        write_text_file(dir / (session.session_id + ".graphml"), graph_to_graphml(graph, stamp));
      }
      if (config.export_json) {
        write_json_file(dir / (session.session_id + ".json"), graph_to_json(graph, stamp));
      }
    }
  }

  // report.txt
  std::ostringstream report;
  report << stamp.comment_line("run-report") << "\n";
  report << "input: " << config.input.filename().string() << "\n";
  report << "ingest: " << ingest_summary(corpus.stats) << "\n";
  report << "sessions analyzed: " << analysis.sessions.size() << "\n";
  if (analysis.stats) {
    const CorpusStats& cs = *analysis.stats;
    report << "\n[scores]\n";
    char line[200];
    std::snprintf(line, sizeof(line), "%-32s %6s %10s %10s %10s %10s\n", "metric", "n", "median",
                  "mean", "ci95_lo", "ci95_hi");
    report << line;
    for (const MetricStats& m : cs.metrics) {
      std::snprintf(line, sizeof(line), "%-32s %6zu %10.2f %10.2f %10.2f %10.2f\n",
                    m.name.c_str(), m.n, m.median, m.mean, m.ci_lower, m.ci_upper);
      report << line;
    }
    report << "sessions without bullies (no bully score): " << cs.sessions_without_bullies
           << "\n";
    report << "victim scores: " << cs.victim_hist.negative << " negative ("
           << percent(cs.victim_hist.negative, analysis.sessions.size()) << "), "
           << cs.victim_hist.nonnegative << " non-negative ("
           << percent(cs.victim_hist.nonnegative, analysis.sessions.size()) << ")\n";
    const std::size_t classified =
        cs.bully_hist.negative + cs.bully_hist.nonnegative;
    report << "bully scores: " << cs.bully_hist.negative << " negative ("
           << percent(cs.bully_hist.negative, classified) << "), " << cs.bully_hist.nonnegative
           << " non-negative (" << percent(cs.bully_hist.nonnegative, classified) << ")\n";
    report << "\n[quadrants]\n";
    for (std::size_t i = 0; i < 4; ++i) {
      const Quadrant q = kQuadrants[i];
      report << quadrant_name(q) << "  " << quadrant_label(q) << ": " << cs.quadrant_counts[i]
             << " sessions (" << percent(cs.quadrant_counts[i], classified) << ")\n";
    }
  }
  report << "\n[motifs]\n";
  if (analysis.all_motifs) {
    report << "top " << config.topk_global << " motifs, all sessions:\n";
    append_prevalence_text(report, *analysis.all_motifs, config.topk_global);
    for (const auto& [q, table] : analysis.quadrant_motifs) {
      report << "\ntop " << config.topk_quadrant << " motifs, " << quadrant_name(q) << " ("
             << quadrant_label(q) << ", " << table.session_count << " sessions):\n";
      append_prevalence_text(report, table, config.topk_quadrant);
    }
  } else {
    report << "no motifs found\n";
  }
  write_text_file(config.outdir / "report.txt", report.str());

  std::ostringstream summary;
  summary << "analyzed " << analysis.sessions.size() << " sessions";
  if (analysis.all_motifs) {
    summary << ", " << analysis.all_motifs->rows.size() << " distinct motifs";
  }
  summary << "; artifacts in " << config.outdir.string();
  return summary.str();
}

void run_export_graph(const RunConfig& config, const std::string& session_id) {
  const IngestResult corpus = read_resolved_corpus(config.input);
  const auto it = std::find_if(
      corpus.sessions.begin(), corpus.sessions.end(),
      [&](const ResolvedSession& session) { return session.session_id == session_id; });
  if (it == corpus.sessions.end()) {
    throw Error("unknown session id: '" + session_id + "'");
  }
  const SessionGraph graph = build_graph(*it);
  const FileStamp stamp = stamp_for(config);
  std::filesystem::create_directories(config.outdir);
  if (config.export_dot) {
    write_text_file(config.outdir / (session_id + ".dot"), graph_to_dot(graph, stamp));
  }
  if (config.export_graphml) {
    write_text_file(config.outdir / (session_id + ".graphml"), graph_to_graphml(graph, stamp));
  }
  if (config.export_json) {
    write_json_file(config.outdir / (session_id + ".json"), graph_to_json(graph, stamp));
  }
}

std::string run_top_motifs(const RunConfig& config, const std::string& scope, int k,
                           const std::optional<std::filesystem::path>& dot_dir) {
  const IngestResult corpus = read_resolved_corpus(config.input);
  const AnalysisResult analysis = analyze_corpus(corpus.sessions, config);

  const PrevalenceTable* table = nullptr;
  if (scope == "all") {
    if (!analysis.all_motifs) throw EmptyScope("corpus contains no motifs");
    table = &*analysis.all_motifs;
  } else {
    for (Quadrant q : kQuadrants) {
      if (scope == quadrant_name(q)) {
        const auto it = analysis.quadrant_motifs.find(q);
        if (it == analysis.quadrant_motifs.end()) {
          throw EmptyScope("no sessions in quadrant " + scope);
        }
        table = &it->second;
      }
    }
    if (!table) throw Error("unknown scope '" + scope + "' (want all or QI..QIV)");
  }

  if (dot_dir) {
    const FileStamp stamp = stamp_for(config);
    std::filesystem::create_directories(*dot_dir);
    int rank = 0;
    for (const PrevalenceRow& row : table->rows) {
      if (++rank > k) break;
      write_text_file(*dot_dir / ("motif_" + std::to_string(rank) + "_" + row.key.hex() + ".dot"),
                      "// " + stamp.text("motif-dot") + "\n" + motif_to_dot(row.key));
    }
  }

  std::ostringstream out;
  out << "top " << k << " motifs, scope " << table->scope << " (" << table->session_count
      << " sessions):\n";
  append_prevalence_text(out, *table, k);
  return out.str();
}

}  // namespace sg
