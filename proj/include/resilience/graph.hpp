#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace resilience {

// Robot positions, one column per robot (d x n).
using Positions = Eigen::MatrixXd;

inline constexpr double kConnectivityTol = 1e-9;

/// Undirected simple graph over robots 0..n-1, value semantics.
class Graph {
 public:
  explicit Graph(int n);

  int size() const { return n_; }
  bool edge(int i, int j) const;
  void set_edge(int i, int j, bool present);
  Graph flipped(int i, int j) const;

  int num_edges() const;
  std::vector<int> neighbors(int i) const;
  std::vector<std::pair<int, int>> edges() const;  // pairs (i, j), i < j

  Eigen::MatrixXd adjacency() const;
  Eigen::MatrixXd closed_adjacency() const;  // A + I

  bool operator==(const Graph& other) const = default;

 private:
  void check_pair(int i, int j) const;

  int n_;
  std::vector<std::uint8_t> adj_;  // flat n x n, kept symmetric, zero diagonal
};

/// Proximity graph: edge(i, j) iff ||x_i - x_j|| <= delta (boundary inclusive).
Graph build_delta_disk_graph(const Positions& positions, double delta);

/// L = Diag(A 1) - A. Entries are small integers represented exactly.
Eigen::MatrixXd laplacian(const Graph& g);

/// Second-smallest Laplacian eigenvalue (algebraic connectivity).
double fiedler_value(const Graph& g);

/// Smallest eigenvalue of (1/n) 1 1^T + L; positive iff connected.
double connectivity_psd_margin(const Graph& g);

/// True iff the algebraic connectivity exceeds tol.
bool is_connected(const Graph& g, double tol = kConnectivityTol);

/// Number of unordered pairs whose edge status differs, ||Pi_a - Pi_b||_F^2 / 2.
int edge_flip_distance(const Graph& a, const Graph& b);

}  // namespace resilience
