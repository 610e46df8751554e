#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "eigenport/graph.hpp"

namespace eigenport {

enum class LaplacianKind { kUnnormalized, kSymmetricNormalized };

/// Eigenvalues ascending; column k of `eigenvectors` is the unit eigenvector
/// paired with eigenvalues[k].
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  LaplacianKind kind = LaplacianKind::kUnnormalized;

  int size() const noexcept { return static_cast<int>(eigenvalues.size()); }
};

/// Combinatorial L = D - A (edge lengths do not enter), or its symmetric
/// normalization D^-1/2 L D^-1/2. The normalized form rejects isolated nodes.
Eigen::MatrixXd laplacian(const Graph& g, LaplacianKind kind = LaplacianKind::kUnnormalized);

/// Dense symmetric eigendecomposition with a deterministic sign convention:
/// the largest-magnitude entry of every eigenvector is positive (first index
/// wins among entries within 1e-9 of the maximum).
Spectrum eigendecompose(const Eigen::MatrixXd& l,
                        LaplacianKind kind = LaplacianKind::kUnnormalized);

/// Closed-form eigenpairs of L(P_n): the DCT-II basis.
Spectrum dct2_eigenpairs(int n);

struct GridMode {
  int kx = 0;
  int ky = 0;
  friend bool operator==(const GridMode&, const GridMode&) = default;
};

struct GridSpectrum {
  Spectrum spectrum;
  std::vector<GridMode> modes;  // sorted index -> (kx, ky)
};

/// Closed-form eigenpairs of L(P_m x P_n), sorted by eigenvalue. Eigenvalues
/// within 1e-12 of each other are ordered lexicographically on (kx, ky).
/// Node (x, y) is index y*m + x, matching build_grid.
GridSpectrum grid_eigenpairs(int m, int n);

struct PhaseSplit {
  std::vector<int> low;   // lambda < threshold
  std::vector<int> high;  // lambda >= threshold
  std::optional<int> first_high;
};

PhaseSplit phase_transition_split(const Spectrum& s, double threshold = 4.0);

/// Sum of fourth powers of a unit vector; ranges from 1/n to 1.
double inverse_participation_ratio(const Eigen::VectorXd& phi);

}  // namespace eigenport
