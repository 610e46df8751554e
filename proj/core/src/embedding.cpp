#include "eigenport/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "eigenport/errors.hpp"

namespace eigenport {

Embedding classical_mds(const Eigen::MatrixXd& d, int n0) {
  const Eigen::Index n = d.rows();
  if (n == 0 || d.cols() != n) throw std::invalid_argument("distance matrix must be square");
  if (n0 < 1 || n0 > n - 1) {
    throw std::invalid_argument("embedding dimension " + std::to_string(n0) +
                                " outside [1, " + std::to_string(n - 1) + "]");
  }
  const double scale = std::max(1.0, d.cwiseAbs().maxCoeff());
  if ((d - d.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("distance matrix must be symmetric");
  }
  if (d.diagonal().cwiseAbs().maxCoeff() > 0.0) {
    throw std::invalid_argument("distance matrix must have a zero diagonal");
  }

  const Eigen::MatrixXd j =
      Eigen::MatrixXd::Identity(n, n) - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::MatrixXd b = -0.5 * j * d.cwiseProduct(d) * j;
  b = 0.5 * (b + b.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success) throw std::runtime_error("MDS eigensolver failed");
  // Ascending from the solver; flip to descending.
  const Eigen::VectorXd eigenvalues = solver.eigenvalues().reverse();
  const Eigen::MatrixXd eigenvectors = solver.eigenvectors().rowwise().reverse();

  Embedding e;
  e.gram_eigenvalues = eigenvalues;
  e.n0 = n0;
  e.points = Eigen::MatrixXd::Zero(n, n0);
  const double top = std::max(0.0, eigenvalues[0]);
  for (int k = 0; k < n0; ++k) {
    double lambda = eigenvalues[k];
    if (lambda < 0.0) {
      if (lambda < -1e-10 * std::max(1.0, top)) {
        throw DimensionError("Gram eigenvalue " + std::to_string(k) + " is negative (" +
                             std::to_string(lambda) + "); cannot embed in " +
                             std::to_string(n0) + " dimensions");
      }
      lambda = 0.0;
    }
    Eigen::VectorXd axis = eigenvectors.col(k) * std::sqrt(lambda);
    axis.array() -= axis.mean();
    Eigen::Index peak = 0;
    const double peak_abs = axis.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(axis[i]) >= peak_abs - 1e-12 * std::max(1.0, peak_abs)) {
        peak = i;
        break;
      }
    }
    if (axis[peak] < 0.0) axis = -axis;
    e.points.col(k) = axis;
  }
  return e;
}

DimChoice choose_dim(std::span<const double> gram_eigenvalues, int dmax) {
  if (gram_eigenvalues.empty()) throw std::invalid_argument("choose_dim needs eigenvalues");
  if (dmax < 1) throw std::invalid_argument("choose_dim needs dmax >= 1");

  DimChoice choice;
  const auto count = static_cast<int>(gram_eigenvalues.size());
  for (int d = 1; d <= dmax && d < count; ++d) {
    const double prev = gram_eigenvalues[d - 1];
    const double next = gram_eigenvalues[d];
    if (next != 0.0) {
      choice.gap_ratios.push_back(prev / next);
    } else {
      choice.gap_ratios.push_back(prev > 0.0 ? std::numeric_limits<double>::infinity()
                                             : std::numeric_limits<double>::quiet_NaN());
    }
  }
  // Eigenvalues within rounding of zero count as zero, so noise below a
  // genuine rank cut cannot masquerade as a gap.
  const double floor = 1e-10 * std::max(0.0, gram_eigenvalues[0]);
  int best = 0;
  for (int d = 1; d <= dmax && d < count; ++d) {
    if (gram_eigenvalues[d - 1] > floor && gram_eigenvalues[d - 1] > 2.0 * gram_eigenvalues[d]) {
      best = d;
    }
  }
  if (best > 0) {
    choice.n0 = best;
    return choice;
  }
  choice.n0 = 2;
  choice.fallback = true;
  return choice;
}

Embedding classical_mds_auto(const Eigen::MatrixXd& d, int dmax) {
  if (d.rows() < 2) throw std::invalid_argument("MDS needs at least two points");
  const Embedding probe = classical_mds(d, 1);
  const auto& gram = probe.gram_eigenvalues;
  const DimChoice choice =
      choose_dim(std::span<const double>(gram.data(), static_cast<std::size_t>(gram.size())), dmax);
  const int n0 = std::min(choice.n0, static_cast<int>(d.rows()) - 1);
  Embedding e = n0 == 1 ? probe : classical_mds(d, n0);
  e.selection = DimSelection::kAuto;
  e.gap_ratios = choice.gap_ratios;
  e.fallback = choice.fallback;
  return e;
}

Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& points) {
  const Eigen::Index n = points.rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      out(i, j) = out(j, i) = (points.row(i) - points.row(j)).norm();
    }
  }
  return out;
}

double reconstruction_check(const Embedding& e, const Eigen::MatrixXd& d) {
  const double norm = d.norm();
  if (norm == 0.0) return 0.0;
  return (pairwise_distances(e.points) - d).norm() / norm;
}

}  // namespace eigenport
