// sgraph: ingest annotated sessions, build session graphs, score them, and
// rank interaction motifs.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sessiongraph/errors.hpp"
#include "sessiongraph/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

void add_common_options(CLI::App* cmd, sg::RunConfig& config) {
  cmd->add_option("-i,--input", config.input, "Input file")->required();
  cmd->add_option("-o,--outdir", config.outdir, "Output directory")->required();
  cmd->add_option("--seed", config.seed, "RNG seed (bootstrap resampling)");
  cmd->add_option("--bin-width", config.bin_width, "Histogram bin width")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--resamples", config.resamples, "Bootstrap resamples")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--topk-global", config.topk_global, "Motifs listed for the full corpus");
  cmd->add_option("--topk-quadrant", config.topk_quadrant, "Motifs listed per quadrant");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Session-graph construction, power-balance scores, and motif prevalence"};
  app.require_subcommand(1);

  sg::RunConfig config;
  std::string session_id;
  std::string scope = "all";
  int top_k = 0;
  std::optional<std::filesystem::path> dot_dir;
  std::string dot_dir_raw;

  CLI::App* ingest = app.add_subcommand("ingest", "Resolve an annotation corpus CSV");
  add_common_options(ingest, config);
  ingest->add_option("--format", config.format, "Corpus input format (csv)");

  CLI::App* analyze = app.add_subcommand("analyze", "Score and census a resolved corpus");
  add_common_options(analyze, config);
  analyze->add_flag("--dump-graphs", config.dump_graphs, "Export every session graph");
  analyze->add_flag("!--no-graphml", config.export_graphml, "Skip GraphML exports");
  analyze->add_flag("!--no-dot", config.export_dot, "Skip DOT exports");
  analyze->add_flag("!--no-json", config.export_json, "Skip JSON exports");

  CLI::App* export_graph = app.add_subcommand("export-graph", "Export one session graph");
  add_common_options(export_graph, config);
  export_graph->add_option("-s,--session", session_id, "Session id")->required();
  export_graph->add_flag("!--no-graphml", config.export_graphml, "Skip GraphML");
  export_graph->add_flag("!--no-dot", config.export_dot, "Skip DOT");
  export_graph->add_flag("!--no-json", config.export_json, "Skip JSON");

  CLI::App* top_motifs = app.add_subcommand("top-motifs", "Print the top-ranked motifs");
  top_motifs->add_option("-i,--input", config.input, "Resolved corpus")->required();
  top_motifs->add_option("--scope", scope, "all or QI..QIV");
  top_motifs->add_option("-k,--top", top_k, "Motifs to list (0 = scope default)");
  top_motifs->add_option("--dot-dir", dot_dir_raw, "Write DOT files for the listed motifs");
  top_motifs->add_option("--seed", config.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*ingest) {
      const sg::IngestResult corpus = sg::run_ingest(config);
      std::cout << sg::ingest_summary(corpus.stats) << "\n";
      for (const std::string& warning : corpus.stats.warnings) {
        std::cerr << "warning: " << warning << "\n";
      }
    } else if (*analyze) {
      std::cout << sg::run_analyze(config) << "\n";
    } else if (*export_graph) {
      sg::run_export_graph(config, session_id);
      std::cout << "exported session '" << session_id << "' to " << config.outdir.string()
                << "\n";
    } else if (*top_motifs) {
      if (top_k <= 0) top_k = (scope == "all") ? config.topk_global : config.topk_quadrant;
      if (!dot_dir_raw.empty()) dot_dir = dot_dir_raw;
      std::cout << sg::run_top_motifs(config, scope, top_k, dot_dir);
    }
  } catch (const sg::Internal& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const sg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
