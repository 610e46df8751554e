#include "eigenport/transport.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "eigenport/network_simplex.hpp"

namespace eigenport {
namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

}  // namespace

TransportPlan solve_balance_lp(const BidirectedIncidence& inc, const Pmf& from, const Pmf& to,
                               LpObjective objective) {
  if (from.size() != inc.node_count || to.size() != inc.node_count) {
    throw std::invalid_argument("pmf size does not match the graph");
  }
  const Eigen::VectorXd demand = to.masses() - from.masses();

  std::vector<FlowArc> arcs(inc.columns.size());
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    arcs[k] = {inc.columns[k].tail, inc.columns[k].head,
               objective == LpObjective::kUnit ? 1.0 : inc.lengths[k]};
  }
  std::vector<double> supply(static_cast<std::size_t>(inc.node_count));
  for (int v = 0; v < inc.node_count; ++v) supply[v] = -demand[v];

  const FlowSolution sol = network_simplex(inc.node_count, arcs, supply);

  TransportPlan plan;
  plan.flows = Eigen::Map<const Eigen::VectorXd>(sol.flows.data(),
                                                 static_cast<Eigen::Index>(sol.flows.size()));
  plan.objective_l1 = plan.flows.sum();
  plan.stats.iterations = sol.iterations;
  plan.stats.residual = (inc.apply(plan.flows) - demand).cwiseAbs().maxCoeff();

  if (!sol.converged) {
    throw NumericError("balance LP did not converge after " + std::to_string(sol.iterations) +
                           " pivots",
                       plan.stats);
  }
  if (sol.unrouted > 1e-9) {
    throw InfeasibleError("balance LP infeasible: " + std::to_string(sol.unrouted) +
                              " mass cannot reach its sinks (disconnected graph?)",
                          plan.stats);
  }
  if (plan.stats.residual > 1e-9) {
    throw NumericError("balance residual " + std::to_string(plan.stats.residual) +
                           " exceeds tolerance",
                       plan.stats);
  }
  return plan;
}

double transport_cost(const TransportPlan& plan, std::span<const double> lengths, double alpha) {
  check_alpha(alpha);
  if (static_cast<Eigen::Index>(lengths.size()) != plan.flows.size()) {
    throw std::invalid_argument("edge length count does not match plan");
  }
  double cost = 0.0;
  for (Eigen::Index k = 0; k < plan.flows.size(); ++k) {
    const double w = plan.flows[k];
    if (w <= kFlowFloor) continue;
    cost += std::pow(w, alpha) * lengths[static_cast<std::size_t>(k)];
  }
  return cost;
}

TransportPlan tree_flow_oracle(const Graph& tree, const Pmf& from, const Pmf& to) {
  if (!tree.is_tree()) throw std::invalid_argument("tree_flow_oracle needs a tree");
  const int n = tree.node_count();
  if (from.size() != n || to.size() != n) {
    throw std::invalid_argument("pmf size does not match the graph");
  }
  const int m = tree.edge_count();

  // Root at node 0; remember which edge reaches each node from its parent.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (int k = 0; k < m; ++k) {
    const auto& e = tree.edges()[k];
    adj[e.u].emplace_back(e.v, k);
    adj[e.v].emplace_back(e.u, k);
  }
  std::vector<int> parent(n, -1), parent_edge(n, -1), order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto [w, k] : adj[order[i]]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = order[i];
      parent_edge[w] = k;
      order.push_back(w);
    }
  }

  // surplus[v] = mass the subtree under v must receive from its parent.
  std::vector<double> surplus(n);
  for (int v = 0; v < n; ++v) surplus[v] = to[v] - from[v];
  TransportPlan plan;
  plan.flows = Eigen::VectorXd::Zero(2 * m);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (parent[v] < 0) continue;
    const double s = surplus[v];
    surplus[parent[v]] += s;
    const int k = parent_edge[v];
    const bool parent_is_low = tree.edges()[k].u == parent[v];
    // Column k runs low -> high; column m + k runs high -> low.
    const bool into_child = s > 0.0;
    const int column = (into_child == parent_is_low) ? k : m + k;
    plan.flows[column] = std::abs(s);
  }
  plan.objective_l1 = plan.flows.sum();
  return plan;
}

DistanceMatrix distance_matrix(const BidirectedIncidence& inc, std::span<const Pmf> pmfs,
                               double alpha, const DistanceOptions& options) {
  check_alpha(alpha);
  if (pmfs.size() < 2) throw std::invalid_argument("distance_matrix needs at least two pmfs");
  const int n = static_cast<int>(pmfs.size());
  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

  DistanceMatrix out;
  out.alpha = alpha;
  out.directed = Eigen::MatrixXd::Zero(n, n);
  out.pair_stats.assign(cells, PairStats{});
  std::vector<std::exception_ptr> errors(cells);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t cell = next++; cell < cells && !failed; cell = next++) {
      const int i = static_cast<int>(cell / static_cast<std::size_t>(n));
      const int j = static_cast<int>(cell % static_cast<std::size_t>(n));
      if (i == j) continue;
      try {
        const TransportPlan plan = solve_balance_lp(inc, pmfs[i], pmfs[j], options.objective);
        out.directed(i, j) = transport_cost(plan, inc, alpha);
        out.pair_stats[cell] = {plan.stats.iterations, plan.stats.residual, plan.objective_l1};
      } catch (TransportError& e) {
        e.set_pair(i, j);
        errors[cell] = std::current_exception();
        failed = true;
      } catch (...) {
        errors[cell] = std::current_exception();
        failed = true;
      }
    }
  };

  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, n * (n - 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  out.values = 0.5 * (out.directed + out.directed.transpose());
  out.values.diagonal().setZero();
  out.max_asymmetry = (out.directed - out.directed.transpose()).cwiseAbs().maxCoeff();
  out.symmetrized = true;
  return out;
}

}  // namespace eigenport
