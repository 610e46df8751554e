#pragma once

#include <span>
#include <vector>

namespace eigenport {

/// Uncapacitated min-cost flow arc.
struct FlowArc {
  int tail = 0;
  int head = 0;
  double cost = 1.0;
};

struct FlowSolution {
  std::vector<double> flows;  // one per input arc
  double objective = 0.0;
  int iterations = 0;
  double unrouted = 0.0;  // mass left on artificial arcs; > 0 means infeasible
  bool converged = true;
};

/// Primal network simplex for
///
///   min  sum_e cost[e] * flow[e]
///   s.t. outflow(v) - inflow(v) = supply[v],  flow >= 0.
///
/// Starts from a big-M artificial tree rooted at an extra node and keeps the
/// spanning tree strongly feasible, so degenerate pivots cannot cycle. The
/// entering arc is the lowest-index arc with negative reduced cost, which
/// makes the returned basic solution a deterministic function of the input.
/// Flows on the final tree are recomputed from the supplies, so the balance
/// residual is at rounding level regardless of the pivot count.
///
/// `max_iterations <= 0` selects a limit proportional to the problem size.
FlowSolution network_simplex(int node_count, std::span<const FlowArc> arcs,
                             std::span<const double> supply, int max_iterations = 0);

}  // namespace eigenport
