#pragma once

#include <vector>

#include <Eigen/Dense>

#include "eigenport/spectral.hpp"

namespace eigenport {

/// Probability mass function over graph nodes: nonnegative, sums to 1.
class Pmf {
 public:
  /// Validates nonnegativity and unit total within 1e-12.
  explicit Pmf(Eigen::VectorXd masses);

  /// Clamps nothing; divides by the exact sum. Rejects negative entries and
  /// a zero total.
  static Pmf normalized(Eigen::VectorXd weights);

  static Pmf uniform(int n);
  static Pmf delta(int n, int at);

  int size() const noexcept { return static_cast<int>(masses_.size()); }
  double operator[](int x) const { return masses_[x]; }
  const Eigen::VectorXd& masses() const noexcept { return masses_; }

  friend bool operator==(const Pmf& a, const Pmf& b) {
    return a.masses_.size() == b.masses_.size() && a.masses_ == b.masses_;
  }

 private:
  Eigen::VectorXd masses_;
};

enum class PmfKind { kSquared, kL1 };

/// p[x] = phi[x]^2, renormalized by the exact sum. Requires a unit vector
/// (within 1e-8).
Pmf to_pmf_squared(const Eigen::VectorXd& phi);

/// p[x] = |phi[x]| / ||phi||_1. Requires phi != 0.
Pmf to_pmf_l1(const Eigen::VectorXd& phi);

Pmf to_pmf(const Eigen::VectorXd& phi, PmfKind kind);

/// One pmf per eigenvector column.
std::vector<Pmf> spectrum_pmfs(const Spectrum& s, PmfKind kind = PmfKind::kSquared);

}  // namespace eigenport
