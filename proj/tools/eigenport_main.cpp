// eigenport: organize graph Laplacian eigenvectors by pairwise transport cost.
//
//   eigenport run --grid 7x3 --alpha 0.5 --dim auto --out out/

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pipeline.hpp"

namespace {

struct RunOptions {
  int path = 0;
  int cycle = 0;
  std::string grid;
  std::string star;
  std::string graph;
  std::string coords;
  std::string swc;
  std::string swc_lengths = "coords";
  double alpha = 0.5;
  std::string dim = "auto";
  std::string laplacian = "raw";
  std::string pmf = "squared";
  std::string lp_objective = "unit";
  std::string out;
  std::string stop_after;
  int threads = 1;
  bool verbose = false;
};

eigenport::RunConfig to_config(const RunOptions& o, const CLI::App& run) {
  using eigenport::GraphSource;
  eigenport::RunConfig cfg;

  int sources = 0;
  for (const char* flag : {"--path", "--cycle", "--grid", "--star", "--graph", "--swc"}) {
    sources += static_cast<int>(run.count(flag));
  }
  if (sources != 1) {
    throw std::invalid_argument(
        "exactly one graph source is required (--path, --cycle, --grid, --star, --graph, --swc)");
  }
  if (run.count("--coords") && !run.count("--graph")) {
    throw std::invalid_argument("--coords requires --graph");
  }

  auto& src = cfg.source;
  if (run.count("--path")) {
    if (o.path < 1) throw std::invalid_argument("--path needs N >= 1");
    src.kind = GraphSource::Kind::kPath;
    src.size = o.path;
  } else if (run.count("--cycle")) {
    if (o.cycle < 3) throw std::invalid_argument("--cycle needs N >= 3");
    src.kind = GraphSource::Kind::kCycle;
    src.size = o.cycle;
  } else if (run.count("--grid")) {
    src.kind = GraphSource::Kind::kGrid;
    std::tie(src.size, src.height) = eigenport::parse_grid_dims(o.grid);
  } else if (run.count("--star")) {
    src.kind = GraphSource::Kind::kStar;
    src.branches = eigenport::parse_branch_list(o.star);
  } else if (run.count("--graph")) {
    src.kind = GraphSource::Kind::kEdgeList;
    src.file = o.graph;
    if (run.count("--coords")) src.coords_file = o.coords;
  } else {
    src.kind = GraphSource::Kind::kSwc;
    src.file = o.swc;
    src.swc_lengths = o.swc_lengths == "unit" ? eigenport::SwcLengths::kUnit
                                              : eigenport::SwcLengths::kCoordinates;
  }

  cfg.alpha = o.alpha;
  if (o.dim != "auto") {
    std::size_t used = 0;
    int n0 = 0;
    try {
      n0 = std::stoi(o.dim, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != o.dim.size() || n0 < 1) {
      throw std::invalid_argument("--dim must be 'auto' or a positive integer");
    }
    cfg.n0 = n0;
  }
  cfg.laplacian = o.laplacian == "sym" ? eigenport::LaplacianKind::kSymmetricNormalized
                                       : eigenport::LaplacianKind::kUnnormalized;
  cfg.pmf = o.pmf == "l1" ? eigenport::PmfKind::kL1 : eigenport::PmfKind::kSquared;
  cfg.lp_objective =
      o.lp_objective == "length" ? eigenport::LpObjective::kLength : eigenport::LpObjective::kUnit;
  cfg.output_dir = o.out;
  if (!o.stop_after.empty()) cfg.stop_after = eigenport::parse_stage(o.stop_after);
  cfg.threads = o.threads;
  cfg.verbosity = o.verbose ? 1 : 0;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Organize graph Laplacian eigenvectors by ramified transport distance"};
  app.require_subcommand(1);

  RunOptions o;
  CLI::App* run = app.add_subcommand("run", "Run the full pipeline on one graph");
  run->add_option("--path", o.path, "Path graph P_N");
  run->add_option("--cycle", o.cycle, "Cycle graph C_N");
  run->add_option("--grid", o.grid, "Grid graph P_M x P_N, given as MxN");
  run->add_option("--star", o.star, "Starlike tree with branch lengths L1,L2,...");
  run->add_option("--graph", o.graph, "Edge-list file (u v [length])");
  run->add_option("--coords", o.coords, "Node coordinates for --graph (id x y [z])");
  run->add_option("--swc", o.swc, "SWC morphology file");
  run->add_option("--swc-lengths", o.swc_lengths, "Edge lengths for --swc")
      ->check(CLI::IsMember({"coords", "unit"}));
  run->add_option("--alpha", o.alpha, "Transport cost exponent in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  run->add_option("--dim", o.dim, "Embedding dimension: auto or N");
  run->add_option("--laplacian", o.laplacian, "Laplacian: raw (D - A) or sym")
      ->check(CLI::IsMember({"raw", "sym"}));
  run->add_option("--pmf", o.pmf, "Eigenvector to pmf conversion")
      ->check(CLI::IsMember({"squared", "l1"}));
  run->add_option("--lp-objective", o.lp_objective, "Balance LP objective")
      ->check(CLI::IsMember({"unit", "length"}));
  run->add_option("--out", o.out, "Output directory")->required();
  run->add_option("--stop-after", o.stop_after, "Stop after a stage")
      ->check(CLI::IsMember({"spectrum", "distance", "embedding"}));
  run->add_option("--threads", o.threads, "Worker threads for pairwise solves (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  run->add_flag("-v,--verbose", o.verbose, "Write per-pair solver statistics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return eigenport::kExitUsage;
  }

  eigenport::RunConfig cfg;
  try {
    cfg = to_config(o, *run);
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n" << run->help();
    return eigenport::kExitUsage;
  }

  try {
    const auto manifest = eigenport::run_pipeline(cfg);
    std::cout << "wrote " << manifest.outputs.size() << " files to " << cfg.output_dir.string()
              << '\n';
  } catch (const eigenport::TransportError& e) {
    std::cerr << "error: " << e.what();
    if (e.pair()) std::cerr << " (pair " << e.pair()->first << " -> " << e.pair()->second << ")";
    std::cerr << '\n';
    return eigenport::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return eigenport::exit_code_for(e);
  }
  return eigenport::kExitOk;
}
