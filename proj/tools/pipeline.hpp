#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eigenport/graph.hpp"
#include "eigenport/graph_io.hpp"
#include "eigenport/pmf.hpp"
#include "eigenport/spectral.hpp"
#include "eigenport/transport.hpp"

namespace eigenport {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitBadGraph = 2,
  kExitNumeric = 3,
  kExitIo = 4,
};

/// Raised for inputs that do not form a usable graph (parse failures,
/// disconnected graphs, fewer than two nodes).
class BadGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  enum class Kind { kPath, kCycle, kGrid, kStar, kEdgeList, kSwc };

  Kind kind = Kind::kPath;
  int size = 0;           // path / cycle length, grid width
  int height = 0;         // grid height
  std::vector<int> branches;
  std::filesystem::path file;
  std::optional<std::filesystem::path> coords_file;
  SwcLengths swc_lengths = SwcLengths::kCoordinates;

  /// Short human-readable form, e.g. "grid 7x3".
  std::string describe() const;
};

enum class Stage { kSpectrum, kDistance, kEmbedding };

struct RunConfig {
  GraphSource source;
  LaplacianKind laplacian = LaplacianKind::kUnnormalized;
  PmfKind pmf = PmfKind::kSquared;
  double alpha = 0.5;
  std::optional<int> n0;  // empty selects automatically
  LpObjective lp_objective = LpObjective::kUnit;
  std::filesystem::path output_dir = "eigenport_out";
  std::optional<Stage> stop_after;
  int threads = 1;
  int verbosity = 0;
};

struct RunManifest {
  std::string json;  // manifest.json contents
  std::vector<std::string> warnings;
  std::vector<std::filesystem::path> outputs;
};

Graph load_graph(const GraphSource& source);

/// Runs spectrum -> pmfs -> transport -> embedding and writes spectrum.csv,
/// eigenvectors.csv, distance.csv, distance.json, embedding.csv,
/// embedding.svg, and manifest.json into cfg.output_dir (stopping early if
/// requested). Throws BadGraphError, TransportError, DimensionError, or
/// IoError; exit_code_for maps them onto the CLI's exit codes.
RunManifest run_pipeline(const RunConfig& cfg);

int exit_code_for(const std::exception& e);

/// Parsers for CLI option values; throw std::invalid_argument.
Stage parse_stage(const std::string& text);
std::pair<int, int> parse_grid_dims(const std::string& text);
std::vector<int> parse_branch_list(const std::string& text);

std::string to_string(Stage stage);
std::string to_string(LaplacianKind kind);
std::string to_string(PmfKind kind);
std::string to_string(LpObjective objective);

}  // namespace eigenport
