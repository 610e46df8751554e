#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "eigenport/errors.hpp"
#include "eigenport/graph.hpp"
#include "eigenport/pmf.hpp"

namespace eigenport {

/// What the balance LP minimizes: the plain l1 norm of the flow (unit) or
/// the length-weighted flow (length).
enum class LpObjective { kUnit, kLength };

/// Nonnegative flow over the 2m bidirected arcs moving one pmf onto another.
struct TransportPlan {
  Eigen::VectorXd flows;      // indexed like BidirectedIncidence::columns
  double objective_l1 = 0.0;  // sum of flows
  SolverStats stats;
};

/// Flows below this are treated as unused when pricing a plan.
inline constexpr double kFlowFloor = 1e-9;

/// Solves min sum(w) subject to Q~~ w = to - from, w >= 0, and returns a
/// basic optimal solution (forest-supported, never both directions of an
/// edge). Throws InfeasibleError when mass cannot reach its sinks and
/// NumericError when the pivot limit is hit or the balance residual
/// exceeds 1e-9.
TransportPlan solve_balance_lp(const BidirectedIncidence& inc, const Pmf& from, const Pmf& to,
                               LpObjective objective = LpObjective::kUnit);

/// Sum over used arcs of flow^alpha * length, with 0^alpha = 0 for every
/// alpha (alpha = 0 gives the total used length).
double transport_cost(const TransportPlan& plan, std::span<const double> lengths, double alpha);

inline double transport_cost(const TransportPlan& plan, const BidirectedIncidence& inc,
                             double alpha) {
  return transport_cost(plan, inc.lengths, alpha);
}

/// Unique cycle-free flow on a tree: the net flow across an edge equals the
/// surplus of (to - from) on the far side of it. Independent of the LP.
TransportPlan tree_flow_oracle(const Graph& tree, const Pmf& from, const Pmf& to);

struct PairStats {
  int iterations = 0;
  double residual = 0.0;
  double objective_l1 = 0.0;
};

struct DistanceOptions {
  LpObjective objective = LpObjective::kUnit;
  int threads = 1;  // <= 0 uses hardware concurrency
};

/// Pairwise transport costs between pmfs.
struct DistanceMatrix {
  Eigen::MatrixXd values;  // symmetrized, zero diagonal
  Eigen::MatrixXd directed;  // raw cost of moving pmf i onto pmf j
  std::vector<PairStats> pair_stats;  // row-major n x n, diagonal empty
  double alpha = 0.5;
  bool symmetrized = true;
  double max_asymmetry = 0.0;

  int size() const noexcept { return static_cast<int>(values.rows()); }
  const PairStats& stats(int i, int j) const {
    return pair_stats[static_cast<std::size_t>(i) * static_cast<std::size_t>(size()) +
                      static_cast<std::size_t>(j)];
  }
};

/// Solves every ordered pair i != j, records max |D_ij - D_ji|, and returns
/// (D + D^T) / 2. The result does not depend on the thread count. Solver
/// errors are rethrown with the offending pair attached.
DistanceMatrix distance_matrix(const BidirectedIncidence& inc, std::span<const Pmf> pmfs,
                               double alpha, const DistanceOptions& options = {});

}  // namespace eigenport
