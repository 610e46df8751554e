#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace eigenport {

using NodeIndex = int;

/// Undirected edge with u < v and a strictly positive length.
struct Edge {
  NodeIndex u = 0;
  NodeIndex v = 0;
  double length = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

using Point = std::array<double, 3>;

/// Immutable undirected graph with optional node coordinates.
///
/// Edges are stored in insertion order with endpoints normalized so that
/// u < v. Coordinates, when present, are stored as 3-vectors; `coord_dim()`
/// reports whether the source was planar (2) or spatial (3).
class Graph {
 public:
  /// Validates and builds a graph. Throws std::invalid_argument on
  /// out-of-range indices, self-loops, duplicate edges, non-positive
  /// lengths, or a coordinate array of the wrong size.
  static Graph from_edges(int node_count, std::vector<Edge> edges,
                          std::vector<Point> coords = {}, int coord_dim = 0);

  int node_count() const noexcept { return node_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool has_coords() const noexcept { return !coords_.empty(); }
  int coord_dim() const noexcept { return coord_dim_; }
  std::span<const Point> coords() const noexcept { return coords_; }

  int degree(NodeIndex v) const { return degrees_.at(static_cast<std::size_t>(v)); }
  std::span<const int> degrees() const noexcept { return degrees_; }

  /// Neighbors of every node, sorted ascending.
  std::vector<std::vector<NodeIndex>> adjacency() const;

  /// Component label per node, labels assigned in order of lowest member.
  std::vector<int> component_labels() const;
  int component_count() const;
  bool is_connected() const { return component_count() == 1; }
  bool is_tree() const { return is_connected() && edge_count() == node_count_ - 1; }

 private:
  Graph() = default;

  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Point> coords_;
  int coord_dim_ = 0;
  std::vector<int> degrees_;
};

/// Path P_n with edges (i, i+1) and coordinates (i, 0).
Graph build_path(int n);

/// Cycle C_n; requires n >= 3.
Graph build_cycle(int n);

/// Cartesian product P_m x P_n. Node (x, y) has index y*m + x and
/// coordinates (x, y). Horizontal edges come first, row by row.
Graph build_grid(int m, int n);

/// One center node (index 0) with a path of each given length attached.
/// Branch b occupies a contiguous index range following branch b-1.
Graph build_starlike_tree(std::span<const int> branch_lengths);

/// Signed incidence of the bidirected graph: column k < m orients edge k
/// from its lower to its higher endpoint, column m + k is the reversal.
struct BidirectedIncidence {
  struct Arc {
    NodeIndex tail = 0;  // -1 entry
    NodeIndex head = 0;  // +1 entry
  };

  int node_count = 0;
  int edge_count = 0;
  std::vector<Arc> columns;     // 2m arcs
  std::vector<double> lengths;  // 2m, lengths[k] == lengths[m + k]

  int column_count() const noexcept { return static_cast<int>(columns.size()); }

  /// Dense n x 2m matrix [Q~ | -Q~].
  Eigen::MatrixXd dense() const;

  /// Q~~ * flows, i.e. net inflow at every node.
  Eigen::VectorXd apply(const Eigen::VectorXd& flows) const;
};

BidirectedIncidence incidence_matrices(const Graph& g);

/// Unsigned n x m incidence Q (both endpoints set to 1).
Eigen::MatrixXd unsigned_incidence(const Graph& g);

/// Oriented n x m incidence Q~ (tail -1, head +1).
Eigen::MatrixXd oriented_incidence(const Graph& g);

}  // namespace eigenport
