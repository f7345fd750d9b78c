// Command-line front end: compute rankings, validate inputs, run the
// journal-selection robustness harness, and export citation-flow graphs.
//
// Exit codes: 0 success, 1 usage or ingestion error, 2 no convergence,
// 3 no internal citations.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eigenfactor/citation_matrix.hpp"
#include "eigenfactor/errors.hpp"
#include "eigenfactor/graph_export.hpp"
#include "eigenfactor/io.hpp"
#include "eigenfactor/pipeline.hpp"
#include "eigenfactor/robustness.hpp"
#include "eigenfactor/serialize.hpp"
#include "eigenfactor/stochastic.hpp"

namespace {

struct CommonArgs {
  std::string journals_path;
  std::string edges_path;
  double alpha = 0.85;
  double tolerance = 1e-12;
  long max_iterations = 100000;
  std::string format = "csv";
  std::string out_path;
};

void add_input_options(CLI::App& cmd, CommonArgs& args) {
  cmd.add_option("--journals", args.journals_path, "journals csv (id,name,articles)")->required();
  cmd.add_option("--edges", args.edges_path, "edges csv (citing,cited,count)")->required();
}

void add_ranking_options(CLI::App& cmd, CommonArgs& args) {
  cmd.add_option("--alpha", args.alpha, "damping factor in (0,1)")->capture_default_str();
  cmd.add_option("--tol", args.tolerance, "L1 convergence tolerance")->capture_default_str();
  cmd.add_option("--max-iter", args.max_iterations, "power-iteration budget")->capture_default_str();
}

void add_output_options(CLI::App& cmd, CommonArgs& args) {
  cmd.add_option("--format", args.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd.add_option("--out", args.out_path, "write output to this file instead of stdout");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw eigenfactor::Error("cannot open output file '" + out_path + "'");
  }
  out << text;
  if (!out) {
    throw eigenfactor::Error("failed writing output file '" + out_path + "'");
  }
}

int exit_code_for(const eigenfactor::Error& error) {
  if (dynamic_cast<const eigenfactor::NoConvergence*>(&error)) {
    return 2;
  }
  if (dynamic_cast<const eigenfactor::NoInternalCitations*>(&error)) {
    return 3;
  }
  return 1;
}

struct Stage {
  const char* name = "setup";
};

int run_guarded(Stage& stage, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const eigenfactor::Error& error) {
    std::cerr << "eigenfactor: " << stage.name << ": " << error.what() << "\n";
    return exit_code_for(error);
  } catch (const std::exception& error) {
    std::cerr << "eigenfactor: " << stage.name << ": " << error.what() << "\n";
    return 1;
  }
}

int run_compute(const CommonArgs& args, std::optional<long> top, std::optional<long> census_year) {
  Stage stage;
  return run_guarded(stage, [&] {
    stage.name = "ingest";
    const eigenfactor::JournalRegistry registry = eigenfactor::load_registry(args.journals_path);
    const std::vector<eigenfactor::CitationEdge> edges = eigenfactor::load_edges(args.edges_path);
    const auto cross = eigenfactor::build_cross_citation_matrix(registry, edges);

    stage.name = "rank";
    const eigenfactor::DampingParameters params{args.alpha, args.tolerance, args.max_iterations};
    const eigenfactor::Ranking ranking =
        eigenfactor::compute_ranking(registry, cross, params, census_year);

    stage.name = "output";
    const std::string text = args.format == "json"
                                 ? eigenfactor::write_ranking_json(ranking, top)
                                 : eigenfactor::write_ranking_csv(ranking, top);
    emit(text, args.out_path);
  });
}

int run_validate(const CommonArgs& args) {
  Stage stage;
  return run_guarded(stage, [&] {
    stage.name = "ingest";
    const eigenfactor::JournalRegistry registry = eigenfactor::load_registry(args.journals_path);
    const std::vector<eigenfactor::CitationEdge> edges = eigenfactor::load_edges(args.edges_path);

    double self_citation_mass = 0.0;
    for (const auto& edge : edges) {
      if (edge.citing == edge.cited) {
        self_citation_mass += edge.count;
      }
    }
    const auto cross = eigenfactor::build_cross_citation_matrix(registry, edges);
    const eigenfactor::MatrixSummary summary = eigenfactor::validate_matrix(cross);

    stage.name = "output";
    std::string text;
    text += "journals: " + std::to_string(registry.size()) + "\n";
    text += "edges: " + std::to_string(edges.size()) + "\n";
    text += "total_citations: " + eigenfactor::format_full(summary.total_citations) + "\n";
    text += "self_citation_mass_dropped: " + eigenfactor::format_full(self_citation_mass) + "\n";
    text += "dangling_columns: " + std::to_string(summary.dangling_columns.size()) + "\n";
    text += "isolated_journals: " + std::to_string(summary.isolated_journals.size()) + "\n";
    emit(text, args.out_path);
  });
}

int run_robustness(const CommonArgs& args, double keep_fraction, long trials, std::uint64_t seed) {
  Stage stage;
  return run_guarded(stage, [&] {
    stage.name = "ingest";
    const eigenfactor::JournalRegistry registry = eigenfactor::load_registry(args.journals_path);
    const std::vector<eigenfactor::CitationEdge> edges = eigenfactor::load_edges(args.edges_path);

    stage.name = "rank";
    eigenfactor::RobustnessOptions options;
    options.keep_fraction = keep_fraction;
    options.trials = trials;
    options.seed = seed;
    options.params = eigenfactor::DampingParameters{args.alpha, args.tolerance, args.max_iterations};
    const eigenfactor::RobustnessReport report =
        eigenfactor::robustness_harness(registry, edges, options);

    stage.name = "output";
    const std::string text = args.format == "json" ? eigenfactor::write_robustness_json(report)
                                                   : eigenfactor::write_robustness_csv(report);
    emit(text, args.out_path);
  });
}

int run_export_graph(const CommonArgs& args, const std::string& graph_format, double threshold) {
  Stage stage;
  return run_guarded(stage, [&] {
    stage.name = "ingest";
    const eigenfactor::JournalRegistry registry = eigenfactor::load_registry(args.journals_path);
    const std::vector<eigenfactor::CitationEdge> edges = eigenfactor::load_edges(args.edges_path);
    const auto cross = eigenfactor::build_cross_citation_matrix(registry, edges);

    stage.name = "rank";
    const eigenfactor::DampingParameters params{args.alpha, args.tolerance, args.max_iterations};
    const eigenfactor::Ranking ranking = eigenfactor::compute_ranking(registry, cross, params);
    const eigenfactor::NormalizedMatrixXd normalized = eigenfactor::normalize_columns(cross);

    stage.name = "output";
    const auto format = graph_format == "graphml" ? eigenfactor::GraphFormat::graphml
                                                  : eigenfactor::GraphFormat::dot;
    emit(eigenfactor::write_citation_graph(registry, normalized, ranking, format, threshold),
         args.out_path);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenfactor and Article Influence scores for journal citation networks"};
  app.require_subcommand(1);

  CommonArgs compute_args;
  long top = -1;
  long census_year = 0;
  CLI::App* compute = app.add_subcommand("compute", "rank journals from a citation edge list");
  add_input_options(*compute, compute_args);
  add_ranking_options(*compute, compute_args);
  add_output_options(*compute, compute_args);
  CLI::Option* top_opt = compute->add_option("--top", top, "display only the N best-ranked rows");
  CLI::Option* census_opt =
      compute->add_option("--census-year", census_year, "label for the citing year (metadata only)");

  CommonArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "parse inputs and report structure");
  add_input_options(*validate, validate_args);
  validate->add_option("--out", validate_args.out_path, "write report to this file");

  CommonArgs robustness_args;
  double keep_fraction = 0.8;
  long trials = 0;
  std::uint64_t seed = 0;
  CLI::App* robustness =
      app.add_subcommand("robustness", "rank stability under journal-subset resampling");
  add_input_options(*robustness, robustness_args);
  add_ranking_options(*robustness, robustness_args);
  add_output_options(*robustness, robustness_args);
  robustness->add_option("--keep-fraction", keep_fraction, "fraction of journals kept per trial")
      ->capture_default_str();
  robustness->add_option("--trials", trials, "number of resampling trials")->required();
  robustness->add_option("--seed", seed, "seed for the trial RNG streams")->capture_default_str();

  CommonArgs graph_args;
  std::string graph_format = "dot";
  double edge_threshold = 0.0;
  CLI::App* graph = app.add_subcommand("export-graph", "emit the citation network for viewers");
  add_input_options(*graph, graph_args);
  add_ranking_options(*graph, graph_args);
  graph->add_option("--graph-format", graph_format, "graph file format")
      ->check(CLI::IsMember({"dot", "graphml"}))
      ->capture_default_str();
  graph->add_option("--edge-threshold", edge_threshold, "omit edges with weight below this")
      ->capture_default_str();
  graph->add_option("--out", graph_args.out_path, "write graph to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (*compute) {
    return run_compute(compute_args,
                       top_opt->count() > 0 ? std::optional<long>(top) : std::nullopt,
                       census_opt->count() > 0 ? std::optional<long>(census_year) : std::nullopt);
  }
  if (*validate) {
    return run_validate(validate_args);
  }
  if (*robustness) {
    if (trials < 1) {
      std::cerr << "eigenfactor: setup: --trials must be at least 1\n";
      return 1;
    }
    return run_robustness(robustness_args, keep_fraction, trials, seed);
  }
  if (*graph) {
    return run_export_graph(graph_args, graph_format, edge_threshold);
  }
  return 1;
}
