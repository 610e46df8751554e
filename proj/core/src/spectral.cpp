#include "eigenport/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace eigenport {
namespace {

void fix_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    auto col = vectors.col(k);
    const double peak = col.cwiseAbs().maxCoeff();
    for (Eigen::Index x = 0; x < col.size(); ++x) {
      if (std::abs(col[x]) >= peak - 1e-9) {
        if (col[x] < 0.0) col = -col;
        break;
      }
    }
  }
}

}  // namespace

Eigen::MatrixXd laplacian(const Graph& g, LaplacianKind kind) {
  const int n = g.node_count();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    l(e.u, e.v) = -1.0;
    l(e.v, e.u) = -1.0;
  }
  for (int v = 0; v < n; ++v) l(v, v) = g.degree(v);
  if (kind == LaplacianKind::kUnnormalized) return l;

  Eigen::VectorXd inv_sqrt(n);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      throw std::invalid_argument("normalized Laplacian undefined: node " + std::to_string(v) +
                                  " is isolated");
    }
    inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  return inv_sqrt.asDiagonal() * l * inv_sqrt.asDiagonal();
}

Spectrum eigendecompose(const Eigen::MatrixXd& l, LaplacianKind kind) {
  if (l.rows() != l.cols() || l.rows() == 0) {
    throw std::invalid_argument("eigendecompose needs a non-empty square matrix");
  }
  const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
  if ((l - l.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("eigendecompose needs a symmetric matrix");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigensolver did not converge");
  }
  Spectrum s{solver.eigenvalues(), solver.eigenvectors(), kind};
  fix_signs(s.eigenvectors);
  return s;
}

Spectrum dct2_eigenpairs(int n) {
  if (n < 1) throw std::invalid_argument("dct2_eigenpairs needs n >= 1");
  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(n, n);
  const double pi = std::numbers::pi;
  for (int k = 0; k < n; ++k) {
    const double sine = std::sin(pi * k / (2.0 * n));
    s.eigenvalues[k] = 4.0 * sine * sine;
    const double a = k == 0 ? 1.0 / std::sqrt(n) : std::sqrt(2.0 / n);
    for (int x = 0; x < n; ++x) {
      s.eigenvectors(x, k) = a * std::cos(pi * k / n * (x + 0.5));
    }
  }
  return s;
}

GridSpectrum grid_eigenpairs(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("grid_eigenpairs needs positive dimensions");
  const Spectrum px = dct2_eigenpairs(m);
  const Spectrum py = dct2_eigenpairs(n);

  struct Entry {
    double lambda;
    GridMode mode;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(m) * n);
  for (int kx = 0; kx < m; ++kx) {
    for (int ky = 0; ky < n; ++ky) {
      entries.push_back({px.eigenvalues[kx] + py.eigenvalues[ky], {kx, ky}});
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.lambda < b.lambda; });
  // Clusters of numerically equal eigenvalues get the lexicographic order.
  for (std::size_t begin = 0; begin < entries.size();) {
    std::size_t end = begin + 1;
    while (end < entries.size() && entries[end].lambda - entries[end - 1].lambda <= 1e-12) ++end;
    std::sort(entries.begin() + static_cast<std::ptrdiff_t>(begin),
              entries.begin() + static_cast<std::ptrdiff_t>(end), [](const Entry& a, const Entry& b) {
                return std::tie(a.mode.kx, a.mode.ky) < std::tie(b.mode.kx, b.mode.ky);
              });
    begin = end;
  }

  GridSpectrum out;
  const int size = m * n;
  out.spectrum.eigenvalues.resize(size);
  out.spectrum.eigenvectors.resize(size, size);
  for (int k = 0; k < size; ++k) {
    const auto& e = entries[static_cast<std::size_t>(k)];
    out.spectrum.eigenvalues[k] = e.lambda;
    out.modes.push_back(e.mode);
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < m; ++x) {
        out.spectrum.eigenvectors(y * m + x, k) =
            px.eigenvectors(x, e.mode.kx) * py.eigenvectors(y, e.mode.ky);
      }
    }
  }
  return out;
}

PhaseSplit phase_transition_split(const Spectrum& s, double threshold) {
  PhaseSplit split;
  for (int k = 0; k < s.size(); ++k) {
    if (s.eigenvalues[k] < threshold) {
      split.low.push_back(k);
    } else {
      split.high.push_back(k);
      if (!split.first_high) split.first_high = k;
    }
  }
  return split;
}

double inverse_participation_ratio(const Eigen::VectorXd& phi) {
  if (phi.size() == 0 || std::abs(phi.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("inverse_participation_ratio needs a unit vector");
  }
  return phi.array().square().square().sum();
}

}  // namespace eigenport
