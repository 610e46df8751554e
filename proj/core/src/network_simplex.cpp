#include "eigenport/network_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace eigenport {
namespace {

class SpanningTree {
 public:
  SpanningTree(int node_count, std::span<const FlowArc> arcs, std::span<const double> supply)
      : n_(node_count),
        root_(node_count),
        arc_count_(static_cast<int>(arcs.size())),
        supply_(supply.begin(), supply.end()) {
    double max_cost = 0.0;
    for (const auto& a : arcs) {
      if (a.tail < 0 || a.head < 0 || a.tail >= n_ || a.head >= n_ || a.tail == a.head) {
        throw std::invalid_argument("network_simplex: arc endpoints out of range");
      }
      if (!(a.cost >= 0.0) || !std::isfinite(a.cost)) {
        throw std::invalid_argument("network_simplex: arc costs must be finite and nonnegative");
      }
      max_cost = std::max(max_cost, a.cost);
    }
    // Any path through original arcs is cheaper than one artificial arc.
    const double artificial_cost = (max_cost + 1.0) * (n_ + 1);
    cost_eps_ = 1e-12 * artificial_cost;

    const int total = arc_count_ + n_;
    tail_.resize(total);
    head_.resize(total);
    cost_.resize(total);
    flow_.assign(total, 0.0);
    in_tree_.assign(total, false);
    for (int e = 0; e < arc_count_; ++e) {
      tail_[e] = arcs[e].tail;
      head_[e] = arcs[e].head;
      cost_[e] = arcs[e].cost;
    }

    parent_.assign(n_ + 1, -1);
    pred_.assign(n_ + 1, -1);
    up_.assign(n_ + 1, false);
    for (int v = 0; v < n_; ++v) {
      const int e = arc_count_ + v;
      cost_[e] = artificial_cost;
      // Zero-supply nodes hang from root->v so every zero-flow tree arc
      // points away from the root (strong feasibility).
      if (supply_[v] > 0.0) {
        tail_[e] = v;
        head_[e] = root_;
        up_[v] = true;
        flow_[e] = supply_[v];
      } else {
        tail_[e] = root_;
        head_[e] = v;
        flow_[e] = -supply_[v];
      }
      parent_[v] = root_;
      pred_[v] = e;
      in_tree_[e] = true;
    }
    refresh();
  }

  // Lowest-index nonbasic original arc with negative reduced cost, or -1.
  int find_entering() const {
    for (int e = 0; e < arc_count_; ++e) {
      if (in_tree_[e]) continue;
      if (cost_[e] + pi_[tail_[e]] - pi_[head_[e]] < -cost_eps_) return e;
    }
    return -1;
  }

  void pivot(int entering) {
    const int first = tail_[entering];
    const int second = head_[entering];
    const int join = find_join(first, second);

    // Flow circulates first -> second along the entering arc, then back up
    // from second to the join and down to first. Ties go to the last
    // blocking arc in that order.
    double delta = std::numeric_limits<double>::infinity();
    int leaving_node = -1;
    bool leaving_on_first = false;
    for (int x = first; x != join; x = parent_[x]) {
      if (up_[x] && flow_[pred_[x]] < delta) {
        delta = flow_[pred_[x]];
        leaving_node = x;
        leaving_on_first = true;
      }
    }
    for (int x = second; x != join; x = parent_[x]) {
      if (!up_[x] && flow_[pred_[x]] <= delta) {
        delta = flow_[pred_[x]];
        leaving_node = x;
        leaving_on_first = false;
      }
    }
    if (leaving_node < 0) {
      // Only reachable if a cycle of negative cost has no blocking arc.
      throw std::logic_error("network_simplex: unbounded pivot");
    }

    flow_[entering] += delta;
    for (int x = first; x != join; x = parent_[x]) flow_[pred_[x]] += up_[x] ? -delta : delta;
    for (int x = second; x != join; x = parent_[x]) flow_[pred_[x]] += up_[x] ? delta : -delta;

    const int leaving_arc = pred_[leaving_node];
    in_tree_[leaving_arc] = false;
    in_tree_[entering] = true;
    flow_[leaving_arc] = 0.0;

    // Re-hang the detached subtree from the entering arc by reversing the
    // parent chain between its new attachment point and the leaving node.
    int x = leaving_on_first ? first : second;
    int new_parent = leaving_on_first ? second : first;
    int new_arc = entering;
    bool new_up = (x == tail_[entering]);
    while (true) {
      const int old_parent = parent_[x];
      const int old_arc = pred_[x];
      const bool old_up = up_[x];
      parent_[x] = new_parent;
      pred_[x] = new_arc;
      up_[x] = new_up;
      if (x == leaving_node) break;
      new_parent = x;
      new_arc = old_arc;
      new_up = !old_up;
      x = old_parent;
    }
    refresh();
  }

  // Exact tree flows from the supplies, leaves first.
  bool recompute_flows() {
    std::vector<double> surplus(supply_.begin(), supply_.end());
    surplus.push_back(0.0);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      const int v = *it;
      if (v == root_) continue;
      double f = up_[v] ? surplus[v] : -surplus[v];
      if (f < 0.0) {
        if (f < -1e-12) return false;
        f = 0.0;
      }
      flow_[pred_[v]] = f;
      surplus[parent_[v]] += surplus[v];
    }
    return true;
  }

  FlowSolution solution(int iterations, bool converged) const {
    FlowSolution out;
    out.flows.assign(flow_.begin(), flow_.begin() + arc_count_);
    for (int e = 0; e < arc_count_; ++e) out.objective += cost_[e] * flow_[e];
    for (int v = 0; v < n_; ++v) out.unrouted += flow_[arc_count_ + v];
    out.iterations = iterations;
    out.converged = converged;
    return out;
  }

 private:
  int find_join(int a, int b) const {
    while (a != b) {
      if (depth_[a] >= depth_[b]) {
        a = parent_[a];
      } else {
        b = parent_[b];
      }
    }
    return a;
  }

  // Rebuilds depth, potentials, and a root-first order from parent links.
  void refresh() {
    const int nodes = n_ + 1;
    child_start_.assign(nodes + 1, 0);
    for (int v = 0; v < nodes; ++v) {
      if (parent_[v] >= 0) ++child_start_[parent_[v] + 1];
    }
    for (int v = 0; v < nodes; ++v) child_start_[v + 1] += child_start_[v];
    children_.assign(n_, 0);
    std::vector<int> fill(child_start_.begin(), child_start_.end() - 1);
    for (int v = 0; v < nodes; ++v) {
      if (parent_[v] >= 0) children_[fill[parent_[v]]++] = v;
    }

    depth_.assign(nodes, 0);
    pi_.assign(nodes, 0.0);
    order_.clear();
    order_.push_back(root_);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int p = order_[i];
      for (int c = child_start_[p]; c < child_start_[p + 1]; ++c) {
        const int v = children_[c];
        depth_[v] = depth_[p] + 1;
        pi_[v] = up_[v] ? pi_[p] - cost_[pred_[v]] : pi_[p] + cost_[pred_[v]];
        order_.push_back(v);
      }
    }
  }

  int n_;
  int root_;
  int arc_count_;
  std::vector<double> supply_;
  double cost_eps_ = 0.0;

  std::vector<int> tail_, head_;
  std::vector<double> cost_, flow_;
  std::vector<bool> in_tree_;

  std::vector<int> parent_, pred_;
  std::vector<bool> up_;  // pred arc points child -> parent
  std::vector<int> depth_;
  std::vector<double> pi_;
  std::vector<int> order_;
  std::vector<int> child_start_, children_;
};

}  // namespace

FlowSolution network_simplex(int node_count, std::span<const FlowArc> arcs,
                             std::span<const double> supply, int max_iterations) {
  if (node_count < 1) throw std::invalid_argument("network_simplex: empty network");
  if (static_cast<int>(supply.size()) != node_count) {
    throw std::invalid_argument("network_simplex: supply size does not match node count");
  }
  for (double s : supply) {
    if (!std::isfinite(s)) throw std::invalid_argument("network_simplex: non-finite supply");
  }
  if (max_iterations <= 0) {
    max_iterations = 100 * (node_count + static_cast<int>(arcs.size())) + 10000;
  }

  SpanningTree tree(node_count, arcs, supply);
  int iterations = 0;
  for (int e = tree.find_entering(); e >= 0; e = tree.find_entering()) {
    if (iterations == max_iterations) return tree.solution(iterations, false);
    tree.pivot(e);
    ++iterations;
  }
  if (!tree.recompute_flows()) return tree.solution(iterations, false);
  return tree.solution(iterations, true);
}

}  // namespace eigenport
