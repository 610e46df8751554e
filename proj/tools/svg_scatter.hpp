#pragma once

#include <filesystem>
#include <string>

#include <Eigen/Dense>

#include "eigenport/embedding.hpp"

namespace eigenport {

/// SVG scatter of an embedding: one circle per eigenvector, labeled by
/// index. Index 0 (DC) is drawn magenta, index 1 (Fiedler) cyan, the rest in
/// gray levels that darken with eigenvalue. n0 = 1 gives a strip plot and
/// n0 = 3 a fixed-angle projection.
///
/// Throws std::invalid_argument for an empty embedding or mismatched
/// eigenvalue count, DimensionError for n0 > 3.
std::string render_svg_scatter(const Embedding& embedding, const Eigen::VectorXd& eigenvalues);

void emit_svg_scatter(const Embedding& embedding, const Eigen::VectorXd& eigenvalues,
                      const std::filesystem::path& path);

}  // namespace eigenport
