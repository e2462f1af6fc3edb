#include "resilience/graph.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace resilience {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw std::invalid_argument("graph size must be >= 1");
}

void Graph::check_pair(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw std::invalid_argument("robot index out of range");
  if (i == j) throw std::invalid_argument("self-loops are not allowed");
}

bool Graph::edge(int i, int j) const {
  check_pair(i, j);
  return adj_[static_cast<std::size_t>(i) * n_ + j] != 0;
}

void Graph::set_edge(int i, int j, bool present) {
  check_pair(i, j);
  adj_[static_cast<std::size_t>(i) * n_ + j] = present ? 1 : 0;
  adj_[static_cast<std::size_t>(j) * n_ + i] = present ? 1 : 0;
}

Graph Graph::flipped(int i, int j) const {
  Graph g = *this;
  g.set_edge(i, j, !edge(i, j));
  return g;
}

int Graph::num_edges() const {
  int count = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adj_[static_cast<std::size_t>(i) * n_ + j]) ++count;
  return count;
}

std::vector<int> Graph::neighbors(int i) const {
  std::vector<int> result;
  for (int j = 0; j < n_; ++j)
    if (j != i && adj_[static_cast<std::size_t>(i) * n_ + j]) result.push_back(j);
  return result;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> result;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adj_[static_cast<std::size_t>(i) * n_ + j]) result.emplace_back(i, j);
  return result;
}

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (adj_[static_cast<std::size_t>(i) * n_ + j]) a(i, j) = 1.0;
  return a;
}

Eigen::MatrixXd Graph::closed_adjacency() const {
  Eigen::MatrixXd a = adjacency();
  a.diagonal().setOnes();
  return a;
}

Graph build_delta_disk_graph(const Positions& positions, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (!positions.allFinite())
    throw std::invalid_argument("positions must be finite");
  const int n = static_cast<int>(positions.cols());
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((positions.col(i) - positions.col(j)).norm() <= delta)
        g.set_edge(i, j, true);
  return g;
}

Eigen::MatrixXd laplacian(const Graph& g) {
  const Eigen::MatrixXd a = g.adjacency();
  Eigen::MatrixXd l = -a;
  l.diagonal() = a.rowwise().sum();
  return l;
}

double fiedler_value(const Graph& g) {
  if (g.size() == 1) return std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian(g),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()(1);
}

double connectivity_psd_margin(const Graph& g) {
  const int n = g.size();
  Eigen::MatrixXd m =
      laplacian(g) + Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

bool is_connected(const Graph& g, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tol must be nonnegative");
  if (g.size() == 1) return true;
  return fiedler_value(g) > tol;
}

int edge_flip_distance(const Graph& a, const Graph& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("edge_flip_distance: size mismatch");
  int count = 0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a.edge(i, j) != b.edge(i, j)) ++count;
  return count;
}

}  // namespace resilience
