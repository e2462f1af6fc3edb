#include "resilience/controller.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace resilience {

double barrier_value(const Eigen::VectorXd& xi, const Eigen::VectorXd& xj,
                     double delta) {
  return delta * delta - (xi - xj).squaredNorm();
}

double class_k_alpha(const BarrierSpec& spec, double h) {
  if (h == 0.0) return 0.0;
  const double s = h > 0.0 ? 1.0 : -1.0;
  return spec.gamma_gain * s * std::pow(std::abs(h), spec.rho);
}

namespace {

constexpr double kFeasTol = 1e-9;

bool row_satisfied(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                   const Eigen::VectorXd& u, Eigen::Index k) {
  return a.row(k).dot(u) >= b(k) - kFeasTol * std::max(1.0, std::abs(b(k)));
}

// Minimum-norm feasible point for a^T u >= b, or nullopt when the system is
// infeasible. The optimum is pinned by at most d linearly independent active
// rows, so enumerating row subsets of size <= d is exhaustive.
std::optional<Eigen::VectorXd> min_norm_feasible(const Eigen::MatrixXd& a,
                                                 const Eigen::VectorXd& b) {
  const Eigen::Index m = a.rows();
  const Eigen::Index d = a.cols();
  std::optional<Eigen::VectorXd> best;
  double best_norm2 = 0.0;

  std::vector<Eigen::Index> subset;
  auto consider = [&]() {
    Eigen::VectorXd u;
    if (subset.empty()) {
      u = Eigen::VectorXd::Zero(d);
    } else {
      Eigen::MatrixXd as(subset.size(), d);
      Eigen::VectorXd bs(subset.size());
      for (std::size_t r = 0; r < subset.size(); ++r) {
        as.row(r) = a.row(subset[r]);
        bs(r) = b(subset[r]);
      }
      u = as.completeOrthogonalDecomposition().solve(bs);
      const double resid = (as * u - bs).cwiseAbs().maxCoeff();
      if (resid > kFeasTol * std::max(1.0, bs.cwiseAbs().maxCoeff())) return;
    }
    for (Eigen::Index k = 0; k < m; ++k)
      if (!row_satisfied(a, b, u, k)) return;
    const double n2 = u.squaredNorm();
    if (!best || n2 < best_norm2) {
      best = std::move(u);
      best_norm2 = n2;
    }
  };

  auto recurse = [&](auto&& self, Eigen::Index start) -> void {
    consider();
    if (static_cast<Eigen::Index>(subset.size()) == d) return;
    for (Eigen::Index k = start; k < m; ++k) {
      subset.push_back(k);
      self(self, k + 1);
      subset.pop_back();
    }
  };
  recurse(recurse, 0);
  return best;
}

Eigen::VectorXd scaled_offsets(const Eigen::VectorXd& b, double s) {
  Eigen::VectorXd out = b;
  for (Eigen::Index k = 0; k < b.size(); ++k)
    if (b(k) > 0.0) out(k) = s * b(k);
  return out;
}

}  // namespace

MinNormResult solve_min_norm_qp(const Eigen::MatrixXd& a,
                                const Eigen::VectorXd& b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve_min_norm_qp: dimension mismatch");
  if (auto u = min_norm_feasible(a, b)) return {*u, 1.0};

  // Conflicting progress demands: scale the positive offsets down uniformly
  // until the system admits a solution. No-retreat rows stay hard, so
  // established barriers are never traded away.
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (min_norm_feasible(a, scaled_offsets(b, mid)))
      lo = mid;
    else
      hi = mid;
  }
  auto u = min_norm_feasible(a, scaled_offsets(b, lo));
  if (!u)
    throw std::logic_error("solve_min_norm_qp: relaxation lost feasibility");
  return {*u, lo};
}

Eigen::VectorXd min_norm_control(int robot, const Positions& positions,
                                 const std::vector<int>& desired_neighbors,
                                 const BarrierSpec& spec) {
  const Eigen::Index d = positions.rows();
  if (desired_neighbors.empty()) return Eigen::VectorXd::Zero(d);

  const double radius = spec.assembly_radius();
  Eigen::MatrixXd a(desired_neighbors.size(), d);
  Eigen::VectorXd b(desired_neighbors.size());
  for (std::size_t r = 0; r < desired_neighbors.size(); ++r) {
    const int j = desired_neighbors[r];
    if (j == robot) throw std::invalid_argument("robot cannot neighbor itself");
    const double h =
        barrier_value(positions.col(robot), positions.col(j), radius);
    a.row(r) = -2.0 * (positions.col(robot) - positions.col(j));
    b(r) = -0.5 * class_k_alpha(spec, h);
  }

  Eigen::VectorXd u = solve_min_norm_qp(a, b).u;
  const double norm = u.norm();
  if (norm > spec.u_max) u *= spec.u_max / norm;
  return u;
}

Positions step_assembly(const Positions& positions, const DesiredEdges& desired,
                        const BarrierSpec& spec) {
  const int n = static_cast<int>(positions.cols());
  std::vector<std::vector<int>> nbrs(n);
  for (const auto& [i, j] : desired) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      throw std::invalid_argument("step_assembly: bad desired edge");
    nbrs[i].push_back(j);
    nbrs[j].push_back(i);
  }
  Positions next = positions;
  for (int i = 0; i < n; ++i)
    next.col(i) += spec.dt * min_norm_control(i, positions, nbrs[i], spec);
  return next;
}

bool assembly_complete(const Positions& positions, const DesiredEdges& desired,
                       double delta) {
  const double radius = kAssemblyRadiusFraction * delta;
  for (const auto& [i, j] : desired)
    if ((positions.col(i) - positions.col(j)).norm() > radius) return false;
  return true;
}

}  // namespace resilience
