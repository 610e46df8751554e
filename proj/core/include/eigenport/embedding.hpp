#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace eigenport {

enum class DimSelection { kFixed, kAuto };

struct Embedding {
  Eigen::MatrixXd points;            // n_vectors x n0, centered columns
  Eigen::VectorXd gram_eigenvalues;  // all of them, descending
  int n0 = 0;
  DimSelection selection = DimSelection::kFixed;
  std::vector<double> gap_ratios;    // lambda_d / lambda_{d+1}, auto selection only
  bool fallback = false;             // auto selection found no qualifying gap
};

/// Torgerson classical MDS: B = -1/2 J (D o D) J, coordinates are the top
/// n0 eigenvectors of B scaled by sqrt(eigenvalue). Each axis is oriented so
/// its largest-magnitude coordinate is positive.
///
/// Throws std::invalid_argument for a non-square, asymmetric, or nonzero-
/// diagonal D or n0 outside [1, n-1], and DimensionError when one of the top
/// n0 eigenvalues is negative.
Embedding classical_mds(const Eigen::MatrixXd& d, int n0);

struct DimChoice {
  int n0 = 2;
  bool fallback = false;
  std::vector<double> gap_ratios;
};

/// Picks the embedding dimension from descending Gram eigenvalues: the
/// largest d in [1, dmax] whose top d eigenvalues are positive and whose
/// d-th eigenvalue is more than twice the (d+1)-th. Eigenvalues within
/// 1e-10 of the largest count as zero. Falls back to n0 = 2
/// (flagged) when no d qualifies.
DimChoice choose_dim(std::span<const double> gram_eigenvalues, int dmax = 3);

/// Classical MDS with the dimension picked by choose_dim and clamped to
/// n - 1. The returned Embedding records the gap ratios and fallback flag.
Embedding classical_mds_auto(const Eigen::MatrixXd& d, int dmax = 3);

/// Relative Frobenius mismatch between the embedded pairwise distances and
/// D; 0 when D is the zero matrix.
double reconstruction_check(const Embedding& e, const Eigen::MatrixXd& d);

/// Euclidean distances between the rows of `points`.
Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& points);

}  // namespace eigenport
