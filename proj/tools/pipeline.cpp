#include "pipeline.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "eigenport/embedding.hpp"
#include "eigenport/errors.hpp"
#include "eigenport/format.hpp"
#include "svg_scatter.hpp"

namespace eigenport {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return text.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

// JSON has no infinities; non-finite values become null.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string spectrum_csv(const Spectrum& s) {
  std::string out = "k,lambda\n";
  for (int k = 0; k < s.size(); ++k) {
    out += std::to_string(k) + ',' + format_double(s.eigenvalues[k]) + '\n';
  }
  return out;
}

std::string eigenvectors_csv(const Spectrum& s) {
  std::string out;
  for (int k = 0; k < s.size(); ++k) out += (k ? ",phi_" : "phi_") + std::to_string(k);
  out += '\n';
  for (Eigen::Index x = 0; x < s.eigenvectors.rows(); ++x) {
    for (Eigen::Index k = 0; k < s.eigenvectors.cols(); ++k) {
      if (k) out += ',';
      out += format_double(s.eigenvectors(x, k));
    }
    out += '\n';
  }
  return out;
}

std::string distance_csv(const DistanceMatrix& d) {
  std::string out = "k";
  for (int j = 0; j < d.size(); ++j) out += ',' + std::to_string(j);
  out += '\n';
  for (int i = 0; i < d.size(); ++i) {
    out += std::to_string(i);
    for (int j = 0; j < d.size(); ++j) out += ',' + format_double(d.values(i, j));
    out += '\n';
  }
  return out;
}

Json distance_json(const DistanceMatrix& d, const RunConfig& cfg) {
  Json j;
  j["alpha"] = d.alpha;
  j["lp_objective"] = to_string(cfg.lp_objective);
  j["symmetrized"] = d.symmetrized;
  j["max_asymmetry"] = d.max_asymmetry;
  if (cfg.verbosity > 0) {
    Json pairs = Json::array();
    for (int a = 0; a < d.size(); ++a) {
      for (int b = 0; b < d.size(); ++b) {
        if (a == b) continue;
        const auto& st = d.stats(a, b);
        pairs.push_back({{"i", a},
                         {"j", b},
                         {"cost", d.directed(a, b)},
                         {"objective_l1", st.objective_l1},
                         {"iterations", st.iterations},
                         {"residual", st.residual}});
      }
    }
    j["pairs"] = std::move(pairs);
  }
  return j;
}

std::string embedding_csv(const Embedding& e, const Spectrum& s) {
  std::string out = "k,lambda";
  for (int c = 0; c < e.n0; ++c) out += ",x" + std::to_string(c);
  out += '\n';
  for (Eigen::Index k = 0; k < e.points.rows(); ++k) {
    out += std::to_string(k) + ',' + format_double(s.eigenvalues[k]);
    for (int c = 0; c < e.n0; ++c) out += ',' + format_double(e.points(k, c));
    out += '\n';
  }
  return out;
}

Json config_json(const RunConfig& cfg) {
  Json source;
  source["description"] = cfg.source.describe();
  if (!cfg.source.file.empty()) source["file"] = cfg.source.file.string();
  if (cfg.source.coords_file) source["coords_file"] = cfg.source.coords_file->string();
  if (cfg.source.kind == GraphSource::Kind::kSwc) {
    source["swc_lengths"] =
        cfg.source.swc_lengths == SwcLengths::kCoordinates ? "coordinates" : "unit";
  }
  Json j;
  j["graph_source"] = std::move(source);
  j["laplacian"] = to_string(cfg.laplacian);
  j["pmf"] = to_string(cfg.pmf);
  j["alpha"] = cfg.alpha;
  j["dim"] = cfg.n0 ? Json(*cfg.n0) : Json("auto");
  j["lp_objective"] = to_string(cfg.lp_objective);
  j["output_dir"] = cfg.output_dir.string();
  j["stop_after"] = cfg.stop_after ? Json(to_string(*cfg.stop_after)) : Json(nullptr);
  j["threads"] = cfg.threads;
  j["verbosity"] = cfg.verbosity;
  return j;
}

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::string GraphSource::describe() const {
  switch (kind) {
    case Kind::kPath:
      return "path " + std::to_string(size);
    case Kind::kCycle:
      return "cycle " + std::to_string(size);
    case Kind::kGrid:
      return "grid " + std::to_string(size) + "x" + std::to_string(height);
    case Kind::kStar: {
      std::string s = "star ";
      for (std::size_t i = 0; i < branches.size(); ++i) {
        s += (i ? "," : "") + std::to_string(branches[i]);
      }
      return s;
    }
    case Kind::kEdgeList:
      return "edge list " + file.string();
    case Kind::kSwc:
      return "swc " + file.string();
  }
  return "unknown";
}

Graph load_graph(const GraphSource& source) {
  try {
    switch (source.kind) {
      case GraphSource::Kind::kPath:
        return build_path(source.size);
      case GraphSource::Kind::kCycle:
        return build_cycle(source.size);
      case GraphSource::Kind::kGrid:
        return build_grid(source.size, source.height);
      case GraphSource::Kind::kStar:
        return build_starlike_tree(source.branches);
      case GraphSource::Kind::kEdgeList: {
        const std::string edges = read_file(source.file);
        if (source.coords_file) {
          const std::string coords = read_file(*source.coords_file);
          return parse_edge_list(edges, coords);
        }
        return parse_edge_list(edges);
      }
      case GraphSource::Kind::kSwc:
        return parse_swc(read_file(source.file), source.swc_lengths);
    }
  } catch (const ParseError& e) {
    throw BadGraphError(source.describe() + ": " + e.what());
  } catch (const FormatError& e) {
    throw BadGraphError(source.describe() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw BadGraphError(source.describe() + ": " + e.what());
  }
  throw BadGraphError("unknown graph source");
}

RunManifest run_pipeline(const RunConfig& cfg) {
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  RunManifest manifest;
  Json timings;
  Json doc;
  doc["config"] = config_json(cfg);

  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) throw IoError("cannot create " + cfg.output_dir.string() + ": " + ec.message());

  auto emit = [&](const std::string& name, const std::string& text) {
    const auto path = cfg.output_dir / name;
    write_file(path, text);
    manifest.outputs.push_back(path);
  };
  auto warn = [&](const std::string& message) {
    manifest.warnings.push_back(message);
    std::cerr << "warning: " << message << '\n';
  };
  auto finish = [&]() -> RunManifest {
    doc["warnings"] = manifest.warnings;
    doc["timings_ms"] = timings;
    Json outputs = Json::array();
    for (const auto& p : manifest.outputs) outputs.push_back(p.filename().string());
    outputs.push_back("manifest.json");
    doc["outputs"] = std::move(outputs);
    manifest.json = doc.dump(2) + '\n';
    write_file(cfg.output_dir / "manifest.json", manifest.json);
    manifest.outputs.push_back(cfg.output_dir / "manifest.json");
    return manifest;
  };

  // Graph.
  auto start = Clock::now();
  const Graph g = load_graph(cfg.source);
  doc["graph"] = {{"n", g.node_count()}, {"m", g.edge_count()}, {"components", g.component_count()}};
  if (g.node_count() < 2) throw BadGraphError("graph needs at least two nodes");
  if (!g.is_connected()) {
    throw BadGraphError("graph is disconnected (" + std::to_string(g.component_count()) +
                        " components); transport between components is infeasible");
  }
  timings["graph"] = millis_since(start);

  // Spectrum.
  start = Clock::now();
  const Spectrum spectrum = eigendecompose(laplacian(g, cfg.laplacian), cfg.laplacian);
  const PhaseSplit split = phase_transition_split(spectrum);
  doc["spectrum"] = {{"lambda_min", spectrum.eigenvalues.minCoeff()},
                     {"lambda_max", spectrum.eigenvalues.maxCoeff()},
                     {"phase_transition_index",
                      split.first_high ? Json(*split.first_high) : Json(nullptr)},
                     {"high_count", split.high.size()}};
  emit("spectrum.csv", spectrum_csv(spectrum));
  emit("eigenvectors.csv", eigenvectors_csv(spectrum));
  timings["spectrum"] = millis_since(start);
  if (cfg.stop_after == Stage::kSpectrum) return finish();

  // Transport.
  start = Clock::now();
  const std::vector<Pmf> pmfs = spectrum_pmfs(spectrum, cfg.pmf);
  const BidirectedIncidence inc = incidence_matrices(g);
  const DistanceMatrix d =
      distance_matrix(inc, pmfs, cfg.alpha, {cfg.lp_objective, cfg.threads});
  doc["distance"] = {{"max_asymmetry", d.max_asymmetry}, {"max_value", d.values.maxCoeff()}};
  emit("distance.csv", distance_csv(d));
  emit("distance.json", distance_json(d, cfg).dump(2) + '\n');
  timings["distance"] = millis_since(start);
  if (d.values.maxCoeff() == 0.0) {
    warn("distance matrix is identically zero; the embedding collapses to the origin");
  }
  if (cfg.stop_after == Stage::kDistance) return finish();

  // Embedding.
  start = Clock::now();
  Embedding e;
  if (cfg.n0) {
    e = classical_mds(d.values, *cfg.n0);
  } else {
    e = classical_mds_auto(d.values);
    if (e.fallback) warn("no Gram eigenvalue gap found; using n0 = " + std::to_string(e.n0));
  }
  const double stress = reconstruction_check(e, d.values);
  Json gram = Json::array();
  for (Eigen::Index k = 0; k < e.gram_eigenvalues.size(); ++k) {
    gram.push_back(e.gram_eigenvalues[k]);
  }
  Json gaps = Json::array();
  for (double r : e.gap_ratios) gaps.push_back(number(r));
  doc["embedding"] = {{"n0", e.n0},
                      {"selection", e.selection == DimSelection::kAuto ? "auto" : "fixed"},
                      {"fallback", e.fallback},
                      {"gap_ratios", std::move(gaps)},
                      {"gram_eigenvalues", std::move(gram)},
                      {"stress", stress}};
  emit("embedding.csv", embedding_csv(e, spectrum));
  if (e.n0 <= 3) {
    try {
      const auto path = cfg.output_dir / "embedding.svg";
      emit_svg_scatter(e, spectrum.eigenvalues, path);
      manifest.outputs.push_back(path);
    } catch (const std::runtime_error& err) {
      if (dynamic_cast<const DimensionError*>(&err) != nullptr) throw;
      throw IoError(err.what());
    }
  } else {
    warn("SVG output skipped: n0 = " + std::to_string(e.n0) + " cannot be drawn");
  }
  timings["embedding"] = millis_since(start);
  return finish();
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BadGraphError*>(&e)) return kExitBadGraph;
  if (dynamic_cast<const TransportError*>(&e)) return kExitNumeric;
  if (dynamic_cast<const DimensionError*>(&e)) return kExitNumeric;
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return kExitUsage;
  return kExitNumeric;
}

Stage parse_stage(const std::string& text) {
  if (text == "spectrum") return Stage::kSpectrum;
  if (text == "distance") return Stage::kDistance;
  if (text == "embedding") return Stage::kEmbedding;
  throw std::invalid_argument("unknown stage '" + text + "'");
}

std::pair<int, int> parse_grid_dims(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw std::invalid_argument("grid must look like MxN");
  std::size_t used_m = 0, used_n = 0;
  int m = 0, n = 0;
  try {
    m = std::stoi(text.substr(0, x), &used_m);
    n = std::stoi(text.substr(x + 1), &used_n);
  } catch (const std::exception&) {
    throw std::invalid_argument("grid must look like MxN");
  }
  if (used_m != x || used_n != text.size() - x - 1 || m < 1 || n < 1) {
    throw std::invalid_argument("grid must look like MxN with positive M, N");
  }
  return {m, n};
}

std::vector<int> parse_branch_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("branch lengths must be positive integers");
    }
    if (used != item.size() || v < 1) {
      throw std::invalid_argument("branch lengths must be positive integers");
    }
    out.push_back(v);
  }
  if (out.size() < 3) throw std::invalid_argument("a starlike tree needs at least 3 branches");
  return out;
}

std::string to_string(Stage stage) {
  switch (stage) {
    case Stage::kSpectrum:
      return "spectrum";
    case Stage::kDistance:
      return "distance";
    case Stage::kEmbedding:
      return "embedding";
  }
  return "?";
}

std::string to_string(LaplacianKind kind) {
  return kind == LaplacianKind::kUnnormalized ? "raw" : "sym";
}

std::string to_string(PmfKind kind) { return kind == PmfKind::kSquared ? "squared" : "l1"; }

std::string to_string(LpObjective objective) {
  return objective == LpObjective::kUnit ? "unit" : "length";
}

}  // namespace eigenport
