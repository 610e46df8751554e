#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "eigenport/spectral.hpp"
#include "test_support.hpp"

namespace eigenport {
namespace {

const double kPi = std::numbers::pi;

void expect_valid_spectrum(const Spectrum& s, const Eigen::MatrixXd& l) {
  const int n = s.size();
  for (int k = 1; k < n; ++k) EXPECT_LE(s.eigenvalues[k - 1], s.eigenvalues[k]);
  const Eigen::MatrixXd gram = s.eigenvectors.transpose() * s.eigenvectors;
  for (int i = 0; i < n; ++i) {
    EXPECT_NEAR(gram(i, i), 1.0, 1e-10);
    for (int j = 0; j < n; ++j) {
      if (i != j) EXPECT_LE(std::abs(gram(i, j)), 1e-8);
    }
    const Eigen::VectorXd r = l * s.eigenvectors.col(i) - s.eigenvalues[i] * s.eigenvectors.col(i);
    EXPECT_LE(r.norm(), 1e-8);
  }
}

TEST(Laplacian, PathOfTwo) {
  const Eigen::MatrixXd l = laplacian(build_path(2));
  Eigen::Matrix2d expected;
  expected << 1, -1, -1, 1;
  EXPECT_TRUE(l.isApprox(expected));
}

TEST(Laplacian, GridRowsSumToZero) {
  const Eigen::MatrixXd l = laplacian(build_grid(7, 3));
  EXPECT_TRUE(l.rowwise().sum().isZero(0.0));
  EXPECT_TRUE(l.isApprox(l.transpose()));
}

TEST(Laplacian, LengthsDoNotEnter) {
  const Graph weighted = Graph::from_edges(3, {{0, 1, 5.0}, {1, 2, 0.25}});
  EXPECT_TRUE(laplacian(weighted).isApprox(laplacian(build_path(3))));
}

TEST(Laplacian, NormalizedPathOfThree) {
  const Eigen::MatrixXd l = laplacian(build_path(3), LaplacianKind::kSymmetricNormalized);
  const double h = -1.0 / std::sqrt(2.0);
  Eigen::Matrix3d expected;
  expected << 1, h, 0, h, 1, h, 0, h, 1;
  EXPECT_TRUE(l.isApprox(expected, 1e-14));
}

TEST(Laplacian, NormalizedRejectsIsolatedNode) {
  const Graph g = Graph::from_edges(3, {{0, 1, 1.0}});
  EXPECT_THROW(laplacian(g, LaplacianKind::kSymmetricNormalized), std::invalid_argument);
  EXPECT_NO_THROW(laplacian(g));
}

TEST(Eigendecompose, SmallPaths) {
  const Spectrum p2 = eigendecompose(laplacian(build_path(2)));
  EXPECT_NEAR(p2.eigenvalues[0], 0.0, 1e-14);
  EXPECT_NEAR(p2.eigenvalues[1], 2.0, 1e-14);
  const Spectrum p3 = eigendecompose(laplacian(build_path(3)));
  EXPECT_NEAR(p3.eigenvalues[0], 0.0, 1e-14);
  EXPECT_NEAR(p3.eigenvalues[1], 1.0, 1e-14);
  EXPECT_NEAR(p3.eigenvalues[2], 3.0, 1e-14);
}

TEST(Eigendecompose, RejectsAsymmetric) {
  Eigen::Matrix2d a;
  a << 1, 2, 0, 1;
  EXPECT_THROW(eigendecompose(a), std::invalid_argument);
}

TEST(Eigendecompose, ConstantKernelVectorOnConnectedGraphs) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_connected(rng, 3 + trial, trial / 2);
    const Spectrum s = eigendecompose(laplacian(g));
    const int n = g.node_count();
    EXPECT_NEAR(s.eigenvalues[0], 0.0, 1e-10);
    for (int x = 0; x < n; ++x) EXPECT_NEAR(s.eigenvectors(x, 0), 1.0 / std::sqrt(n), 1e-10);
  }
}

TEST(Eigendecompose, SignConventionLargestEntryPositive) {
  testing::Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_connected(rng, 4 + trial, trial);
    const Spectrum s = eigendecompose(laplacian(g));
    for (int k = 0; k < s.size(); ++k) {
      const Eigen::VectorXd phi = s.eigenvectors.col(k);
      const double big = phi.cwiseAbs().maxCoeff();
      int first = 0;
      while (std::abs(phi[first]) < big - 1e-9) ++first;
      EXPECT_GT(phi[first], 0.0);
    }
  }
}

TEST(Eigendecompose, InvariantsOnCorpus) {
  std::vector<Graph> corpus{build_path(1),  build_path(9),       build_cycle(8),
                            build_grid(7, 3), build_grid(4, 4)};
  const std::vector<int> star{5, 5, 5};
  corpus.push_back(build_starlike_tree(star));
  testing::Rng rng(8);
  for (int i = 0; i < 10; ++i) corpus.push_back(testing::random_connected(rng, 10 + i, i));
  for (const Graph& g : corpus) {
    for (auto kind : {LaplacianKind::kUnnormalized, LaplacianKind::kSymmetricNormalized}) {
      if (kind == LaplacianKind::kSymmetricNormalized && g.node_count() == 1) continue;
      const Eigen::MatrixXd l = laplacian(g, kind);
      expect_valid_spectrum(eigendecompose(l, kind), l);
    }
  }
}

TEST(Eigendecompose, MatchesJacobiOracle) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::MatrixXd l = laplacian(testing::random_connected(rng, 5 + 2 * trial, trial));
    const Spectrum s = eigendecompose(l);
    const auto oracle = testing::jacobi_eigenvalues(l);
    for (int k = 0; k < s.size(); ++k) EXPECT_NEAR(s.eigenvalues[k], oracle[k], 1e-9);
  }
}

TEST(Dct2, ClosedFormValues) {
  EXPECT_NEAR(dct2_eigenpairs(3).eigenvalues[1], 1.0, 1e-15);
  EXPECT_NEAR(dct2_eigenpairs(7).eigenvalues[1], 0.19806226419516, 1e-13);
  const Spectrum s = dct2_eigenpairs(5);
  for (int x = 0; x < 5; ++x) EXPECT_DOUBLE_EQ(s.eigenvectors(x, 0), 1.0 / std::sqrt(5.0));
}

TEST(Dct2, MatchesEigensolverOnPaths) {
  for (int n = 2; n <= 64; ++n) {
    const Spectrum computed = eigendecompose(laplacian(build_path(n)));
    const Spectrum exact = dct2_eigenpairs(n);
    for (int k = 0; k < n; ++k) {
      EXPECT_NEAR(computed.eigenvalues[k], exact.eigenvalues[k], 1e-8) << "n=" << n << " k=" << k;
      const double overlap = computed.eigenvectors.col(k).dot(exact.eigenvectors.col(k));
      EXPECT_NEAR(std::abs(overlap), 1.0, 1e-8) << "n=" << n << " k=" << k;
    }
  }
}

TEST(GridEigenpairs, SevenByThreeOrdering) {
  const GridSpectrum gs = grid_eigenpairs(7, 3);
  ASSERT_EQ(gs.modes.size(), 21u);
  EXPECT_EQ(gs.modes[0], (GridMode{0, 0}));
  EXPECT_EQ(gs.modes[1], (GridMode{1, 0}));
  EXPECT_EQ(gs.modes[2], (GridMode{2, 0}));
  EXPECT_EQ(gs.modes[3], (GridMode{0, 1}));
  EXPECT_EQ(gs.modes[4], (GridMode{1, 1}));
  EXPECT_NEAR(gs.spectrum.eigenvalues[1], 4 * std::pow(std::sin(kPi / 14), 2), 1e-14);
  EXPECT_NEAR(gs.spectrum.eigenvalues[3], 4 * std::pow(std::sin(kPi / 6), 2), 1e-14);
  EXPECT_NEAR(gs.spectrum.eigenvalues[4], 1.198062264195162, 1e-12);
}

TEST(GridEigenpairs, TiesAreLexicographic) {
  const GridSpectrum gs = grid_eigenpairs(4, 4);
  for (std::size_t k = 1; k < gs.modes.size(); ++k) {
    const double gap = gs.spectrum.eigenvalues[k] - gs.spectrum.eigenvalues[k - 1];
    if (gap <= 1e-12) {
      EXPECT_LT(std::tie(gs.modes[k - 1].kx, gs.modes[k - 1].ky),
                std::tie(gs.modes[k].kx, gs.modes[k].ky));
    }
  }
  EXPECT_EQ(gs.modes[1], (GridMode{0, 1}));
  EXPECT_EQ(gs.modes[2], (GridMode{1, 0}));
}

TEST(GridEigenpairs, MatchesEigensolverSweep) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 3}, {5, 2}, {7, 3}, {6, 5}}) {
    const Eigen::MatrixXd l = laplacian(build_grid(m, n));
    const Spectrum computed = eigendecompose(l);
    const GridSpectrum exact = grid_eigenpairs(m, n);
    for (int k = 0; k < m * n; ++k) {
      EXPECT_NEAR(computed.eigenvalues[k], exact.spectrum.eigenvalues[k], 1e-8);
      const Eigen::VectorXd phi = exact.spectrum.eigenvectors.col(k);
      EXPECT_LE((l * phi - exact.spectrum.eigenvalues[k] * phi).norm(), 1e-10);
    }
  }
}

TEST(Orthonormality, DistinctEigenvectorsAreSqrtTwoApart) {
  const Spectrum s = eigendecompose(laplacian(build_grid(5, 3)));
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      const double dist = (s.eigenvectors.col(i) - s.eigenvectors.col(j)).norm();
      EXPECT_NEAR(dist, i == j ? 0.0 : std::sqrt(2.0), 1e-8);
    }
  }
}

TEST(PhaseSplit, PathsHaveNoHighSet) {
  for (int n = 1; n <= 40; ++n) {
    const PhaseSplit split = phase_transition_split(eigendecompose(laplacian(build_path(n))));
    EXPECT_TRUE(split.high.empty());
    EXPECT_FALSE(split.first_high.has_value());
    EXPECT_EQ(static_cast<int>(split.low.size()), n);
  }
}

// Frozen from a direct computation, cross-checked against the Jacobi oracle.
TEST(PhaseSplit, StarlikeTreeLocalizesAboveFour) {
  const std::vector<int> branches{5, 5, 5};
  const Eigen::MatrixXd l = laplacian(build_starlike_tree(branches));
  const Spectrum s = eigendecompose(l);
  const PhaseSplit split = phase_transition_split(s);
  ASSERT_EQ(s.size(), 16);
  ASSERT_EQ(split.high.size(), 1u);
  ASSERT_EQ(split.first_high, 15);
  EXPECT_NEAR(s.eigenvalues[15], 4.4988937746, 1e-9);
  EXPECT_NEAR(testing::jacobi_eigenvalues(l)[15], s.eigenvalues[15], 1e-10);
  EXPECT_LT(s.eigenvalues[14], 4.0);

  std::vector<double> low_ipr;
  for (int k : split.low) low_ipr.push_back(inverse_participation_ratio(s.eigenvectors.col(k)));
  std::sort(low_ipr.begin(), low_ipr.end());
  const double median = low_ipr[low_ipr.size() / 2];
  for (int k : split.high) {
    EXPECT_GT(inverse_participation_ratio(s.eigenvectors.col(k)), median);
  }
}

TEST(PhaseSplit, ThresholdIsInclusive) {
  Spectrum s;
  s.eigenvalues = Eigen::Vector3d(1.0, 4.0, 5.0);
  s.eigenvectors = Eigen::Matrix3d::Identity();
  const PhaseSplit split = phase_transition_split(s);
  EXPECT_EQ(split.low, std::vector<int>{0});
  EXPECT_EQ(split.high, (std::vector<int>{1, 2}));
  EXPECT_EQ(split.first_high, 1);
}

TEST(Ipr, Examples) {
  EXPECT_NEAR(inverse_participation_ratio(Eigen::Vector4d::Constant(0.5)), 0.25, 1e-15);
  EXPECT_DOUBLE_EQ(inverse_participation_ratio(Eigen::Vector4d::UnitX()), 1.0);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(inverse_participation_ratio(Eigen::Vector4d(h, h, 0, 0)), 0.5, 1e-15);
  EXPECT_THROW(inverse_participation_ratio(Eigen::Vector2d(1, 1)), std::invalid_argument);
}

TEST(Ipr, BoundedByOneOverNAndOne) {
  testing::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 30;
    const double ipr = inverse_participation_ratio(testing::random_unit(rng, n));
    EXPECT_GE(ipr, 1.0 / n - 1e-12);
    EXPECT_LE(ipr, 1.0 + 1e-12);
  }
}

}  // namespace
}  // namespace eigenport
