#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sessiongraph/ingest.hpp"
#include "sessiongraph/prevalence.hpp"
#include "sessiongraph/stamp.hpp"

namespace sg {

/// Configuration of one pipeline run. Identical config plus identical input
/// and seed must produce byte-identical output trees.
struct RunConfig {
  std::filesystem::path input;
  std::string format = "csv";  // corpus input format accepted by ingest
  std::filesystem::path outdir;
  double bin_width = 10.0;
  int resamples = 10000;
  std::uint64_t seed = 1;
  int topk_global = 10;
  int topk_quadrant = 5;
  bool export_graphml = true;
  bool export_dot = true;
  bool export_json = true;
  bool dump_graphs = false;  // analyze: also export every session graph
};

/// Hash over the semantic configuration fields (not the paths).
std::string config_hash(const RunConfig& config);
FileStamp stamp_for(const RunConfig& config);

void write_resolved_corpus(const std::filesystem::path& path, const IngestResult& corpus,
                           const FileStamp& stamp);
IngestResult read_resolved_corpus(const std::filesystem::path& path);

/// Everything analyze computes before writing files.
struct SessionAnalysis {
  SessionScores scores;
  std::optional<Quadrant> quad;
  SessionCensus census;
};

struct AnalysisResult {
  std::vector<SessionAnalysis> sessions;
  std::optional<CorpusStats> stats;          // absent for an empty corpus
  std::optional<PrevalenceTable> all_motifs;  // absent when no motifs exist
  std::map<Quadrant, PrevalenceTable> quadrant_motifs;
};

AnalysisResult analyze_corpus(std::span<const ResolvedSession> sessions,
                              const RunConfig& config);

/// One-line retention/drop summary of an ingest run.
std::string ingest_summary(const IngestStats& stats);

/// ingest: corpus CSV -> outdir/resolved.json.
IngestResult run_ingest(const RunConfig& config);

/// analyze: resolved corpus -> score/census/prevalence tables, histograms,
/// scatter, stats.json, report.txt under outdir.
std::string run_analyze(const RunConfig& config);

/// export-graph: one session's graph in the enabled formats.
void run_export_graph(const RunConfig& config, const std::string& session_id);

/// top-motifs: ranked table for a scope ("all" or QI..QIV) as text; DOT
/// bundle of the top k motifs when dot_dir is set.
std::string run_top_motifs(const RunConfig& config, const std::string& scope, int k,
                           const std::optional<std::filesystem::path>& dot_dir);

}  // namespace sg
