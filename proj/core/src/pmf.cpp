#include "eigenport/pmf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eigenport {

Pmf::Pmf(Eigen::VectorXd masses) : masses_(std::move(masses)) {
  if (masses_.size() == 0) throw std::invalid_argument("pmf must have at least one entry");
  if ((masses_.array() < 0.0).any() || !masses_.allFinite()) {
    throw std::invalid_argument("pmf entries must be finite and nonnegative");
  }
  if (std::abs(masses_.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("pmf entries must sum to 1");
  }
}

Pmf Pmf::normalized(Eigen::VectorXd weights) {
  if (weights.size() == 0 || (weights.array() < 0.0).any() || !weights.allFinite()) {
    throw std::invalid_argument("pmf weights must be finite and nonnegative");
  }
  const double total = weights.sum();
  if (!(total > 0.0)) throw std::invalid_argument("pmf weights sum to zero");
  weights /= total;
  return Pmf(std::move(weights));
}

Pmf Pmf::uniform(int n) {
  if (n < 1) throw std::invalid_argument("uniform pmf needs n >= 1");
  return Pmf(Eigen::VectorXd::Constant(n, 1.0 / n));
}

Pmf Pmf::delta(int n, int at) {
  if (n < 1 || at < 0 || at >= n) throw std::invalid_argument("delta pmf index out of range");
  Eigen::VectorXd m = Eigen::VectorXd::Zero(n);
  m[at] = 1.0;
  return Pmf(std::move(m));
}

Pmf to_pmf_squared(const Eigen::VectorXd& phi) {
  if (phi.size() == 0 || std::abs(phi.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("to_pmf_squared needs a unit vector (norm " +
                                std::to_string(phi.norm()) + ")");
  }
  return Pmf::normalized(phi.array().square().matrix());
}

Pmf to_pmf_l1(const Eigen::VectorXd& phi) {
  if (phi.size() == 0 || phi.cwiseAbs().sum() == 0.0) {
    throw std::invalid_argument("to_pmf_l1 needs a nonzero vector");
  }
  return Pmf::normalized(phi.cwiseAbs());
}

Pmf to_pmf(const Eigen::VectorXd& phi, PmfKind kind) {
  return kind == PmfKind::kSquared ? to_pmf_squared(phi) : to_pmf_l1(phi);
}

std::vector<Pmf> spectrum_pmfs(const Spectrum& s, PmfKind kind) {
  std::vector<Pmf> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (int k = 0; k < s.size(); ++k) out.push_back(to_pmf(s.eigenvectors.col(k), kind));
  return out;
}

}  // namespace eigenport
