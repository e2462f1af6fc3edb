#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "resilience/graph.hpp"

namespace resilience {

// Fraction of the interaction radius the controller drives edges to, so that
// assembled links sit safely inside the boundary of the proximity graph.
inline constexpr double kAssemblyRadiusFraction = 0.95;

struct BarrierSpec {
  double delta = 0.6;       // interaction radius (m)
  double rho = 0.5;         // class-K exponent, in [0, 1)
  double gamma_gain = 1.0;  // class-K gain
  double u_max = 0.2;       // per-robot speed cap (m/s)
  double dt = 0.01;         // Euler step (s)

  // Radius the barrier actually targets (hysteresis below delta).
  double assembly_radius() const { return kAssemblyRadiusFraction * delta; }
};

// Unordered robot pairs to be realized as proximity edges.
using DesiredEdges = std::vector<std::pair<int, int>>;

/// h(x_i, x_j) = delta^2 - ||x_i - x_j||^2.
double barrier_value(const Eigen::VectorXd& xi, const Eigen::VectorXd& xj,
                     double delta);

/// gamma * sign(h) * |h|^rho; odd, continuous, zero at zero.
double class_k_alpha(const BarrierSpec& spec, double h);

struct MinNormResult {
  Eigen::VectorXd u;
  // 1 when the constraint set was feasible as posed; otherwise the largest
  // uniform scaling of the progress demands that admits a solution.
  double scale = 1.0;
};

/// Smallest-norm u with a^T u >= b row-wise, by active-set enumeration.
/// Infeasible systems are solved with the positive offsets scaled down
/// uniformly (hard no-retreat rows are never relaxed).
MinNormResult solve_min_norm_qp(const Eigen::MatrixXd& a,
                                const Eigen::VectorXd& b);

/// Barrier-constrained least-effort velocity for one robot against its
/// desired neighbors; clipped to u_max.
Eigen::VectorXd min_norm_control(int robot, const Positions& positions,
                                 const std::vector<int>& desired_neighbors,
                                 const BarrierSpec& spec);

/// One synchronous Euler step of every robot's min-norm controller.
Positions step_assembly(const Positions& positions, const DesiredEdges& desired,
                        const BarrierSpec& spec);

/// True iff every desired pair is within the assembly radius.
bool assembly_complete(const Positions& positions, const DesiredEdges& desired,
                       double delta);

}  // namespace resilience
