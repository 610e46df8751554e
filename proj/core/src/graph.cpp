#include "eigenport/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace eigenport {

Graph Graph::from_edges(int node_count, std::vector<Edge> edges, std::vector<Point> coords,
                        int coord_dim) {
  if (node_count < 1) {
    throw std::invalid_argument("graph must have at least one node");
  }
  if (!coords.empty() && static_cast<int>(coords.size()) != node_count) {
    throw std::invalid_argument("coordinate count " + std::to_string(coords.size()) +
                                " does not match node count " + std::to_string(node_count));
  }
  if (!coords.empty() && coord_dim != 2 && coord_dim != 3) {
    throw std::invalid_argument("coordinate dimension must be 2 or 3");
  }

  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") references a node outside [0, " +
                                  std::to_string(node_count) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
    }
    if (!(e.length > 0.0) || !std::isfinite(e.length)) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") has non-positive length");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ")");
    }
  }

  Graph g;
  g.node_count_ = node_count;
  g.edges_ = std::move(edges);
  g.coords_ = std::move(coords);
  g.coord_dim_ = g.coords_.empty() ? 0 : coord_dim;
  g.degrees_.assign(static_cast<std::size_t>(node_count), 0);
  for (const auto& e : g.edges_) {
    ++g.degrees_[static_cast<std::size_t>(e.u)];
    ++g.degrees_[static_cast<std::size_t>(e.v)];
  }
  return g;
}

std::vector<std::vector<NodeIndex>> Graph::adjacency() const {
  std::vector<std::vector<NodeIndex>> adj(static_cast<std::size_t>(node_count_));
  for (const auto& e : edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

std::vector<int> Graph::component_labels() const {
  // Union-find with path halving; labels renumbered by lowest member.
  std::vector<int> parent(static_cast<std::size_t>(node_count_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : edges_) {
    int a = find(e.u);
    int b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> label(static_cast<std::size_t>(node_count_), -1);
  std::vector<int> root_label(static_cast<std::size_t>(node_count_), -1);
  int next = 0;
  for (int v = 0; v < node_count_; ++v) {
    int r = find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

int Graph::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

Graph build_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1, got " + std::to_string(n));
  std::vector<Edge> edges;
  std::vector<Point> coords;
  for (int i = 0; i < n; ++i) {
    coords.push_back({static_cast<double>(i), 0.0, 0.0});
    if (i + 1 < n) edges.push_back({i, i + 1, 1.0});
  }
  return Graph::from_edges(n, std::move(edges), std::move(coords), 2);
}

Graph build_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  std::vector<Point> coords;
  const double step = 2.0 * std::numbers::pi / n;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n, 1.0});
    coords.push_back({std::cos(step * i), std::sin(step * i), 0.0});
  }
  return Graph::from_edges(n, std::move(edges), std::move(coords), 2);
}

Graph build_grid(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("grid needs positive dimensions, got " + std::to_string(m) + "x" +
                                std::to_string(n));
  }
  std::vector<Edge> edges;
  std::vector<Point> coords(static_cast<std::size_t>(m) * n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < m; ++x) {
      coords[static_cast<std::size_t>(y * m + x)] = {static_cast<double>(x),
                                                     static_cast<double>(y), 0.0};
      if (x + 1 < m) edges.push_back({y * m + x, y * m + x + 1, 1.0});
    }
  }
  for (int y = 0; y + 1 < n; ++y) {
    for (int x = 0; x < m; ++x) edges.push_back({y * m + x, (y + 1) * m + x, 1.0});
  }
  return Graph::from_edges(m * n, std::move(edges), std::move(coords), 2);
}

Graph build_starlike_tree(std::span<const int> branch_lengths) {
  if (branch_lengths.size() < 3) {
    throw std::invalid_argument("starlike tree needs at least 3 branches");
  }
  std::vector<Edge> edges;
  std::vector<Point> coords{{0.0, 0.0, 0.0}};
  const double step = 2.0 * std::numbers::pi / static_cast<double>(branch_lengths.size());
  int next = 1;
  for (std::size_t b = 0; b < branch_lengths.size(); ++b) {
    const int len = branch_lengths[b];
    if (len < 1) throw std::invalid_argument("branch lengths must be positive");
    const double dx = std::cos(step * static_cast<double>(b));
    const double dy = std::sin(step * static_cast<double>(b));
    int prev = 0;
    for (int s = 1; s <= len; ++s) {
      edges.push_back({prev, next, 1.0});
      coords.push_back({dx * s, dy * s, 0.0});
      prev = next++;
    }
  }
  return Graph::from_edges(next, std::move(edges), std::move(coords), 2);
}

Eigen::MatrixXd BidirectedIncidence::dense() const {
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(node_count, column_count());
  for (int k = 0; k < column_count(); ++k) {
    q(columns[k].tail, k) = -1.0;
    q(columns[k].head, k) = 1.0;
  }
  return q;
}

Eigen::VectorXd BidirectedIncidence::apply(const Eigen::VectorXd& flows) const {
  if (flows.size() != column_count()) {
    throw std::invalid_argument("flow vector length does not match incidence columns");
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(node_count);
  for (int k = 0; k < column_count(); ++k) {
    out[columns[k].tail] -= flows[k];
    out[columns[k].head] += flows[k];
  }
  return out;
}

BidirectedIncidence incidence_matrices(const Graph& g) {
  BidirectedIncidence inc;
  inc.node_count = g.node_count();
  inc.edge_count = g.edge_count();
  const auto m = static_cast<std::size_t>(g.edge_count());
  inc.columns.resize(2 * m);
  inc.lengths.resize(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    const Edge& e = g.edges()[k];
    inc.columns[k] = {e.u, e.v};
    inc.columns[m + k] = {e.v, e.u};
    inc.lengths[k] = inc.lengths[m + k] = e.length;
  }
  return inc;
}

Eigen::MatrixXd unsigned_incidence(const Graph& g) {
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(g.node_count(), g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    q(g.edges()[k].u, k) = 1.0;
    q(g.edges()[k].v, k) = 1.0;
  }
  return q;
}

Eigen::MatrixXd oriented_incidence(const Graph& g) {
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(g.node_count(), g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    q(g.edges()[k].u, k) = -1.0;
    q(g.edges()[k].v, k) = 1.0;
  }
  return q;
}

}  // namespace eigenport
