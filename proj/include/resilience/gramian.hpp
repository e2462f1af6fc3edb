#pragma once

#include <Eigen/Dense>
#include <vector>

#include "resilience/graph.hpp"
#include "resilience/sensing.hpp"

namespace resilience {

// Absolute cutoff below which a one-hop Gramian eigenvalue counts as zero.
inline constexpr double kGramianEigTol = 1e-8;

/// Sensor-wise observability Gramians Theta_k over [0, T], one per library
/// entry. Computed once per (A_e, library, T) and immutable afterwards.
struct GramianSet {
  double horizon = 0.0;
  std::vector<Eigen::MatrixXd> thetas;
};

/// One-hop observability Gramians O_1..O_n.
struct OneHopGramians {
  std::vector<Eigen::MatrixXd> grams;
};

/// Integral of exp(A^T t) H^T H exp(A t) over [0, T] via the augmented
/// matrix-exponential construction; result symmetrized.
Eigen::MatrixXd sensor_gramian(const Eigen::MatrixXd& a_e,
                               const Eigen::MatrixXd& h, double horizon);

GramianSet compute_gramian_set(const Eigen::MatrixXd& a_e,
                               const SensorLibrary& lib, double horizon);

/// O_i = sum_k [Abar Gamma]_{i,k} Theta_k with integer multiplicities.
OneHopGramians one_hop_gramians(const Graph& g, const ResourceMatrix& gamma,
                                const GramianSet& set);

double min_eigenvalue(const Eigen::MatrixXd& sym);

/// Rank test on the one-hop measurement matrix. When a GramianSet is given,
/// the minimum eigenvalue of O_i must agree with the rank verdict; a
/// disagreement signals an ill-conditioned horizon and raises NumericError.
bool is_robot_oho(const Eigen::MatrixXd& a_e, const Graph& g,
                  const ResourceMatrix& gamma, const SensorLibrary& lib,
                  int robot, double tol = kRankTol,
                  const GramianSet* grams = nullptr,
                  double gram_tol = kGramianEigTol);

/// Conjunction of is_robot_oho over all robots, short-circuiting.
bool is_team_oho(const Eigen::MatrixXd& a_e, const Graph& g,
                 const ResourceMatrix& gamma, const SensorLibrary& lib,
                 double tol = kRankTol, const GramianSet* grams = nullptr,
                 double gram_tol = kGramianEigTol);

/// (1/n) * sum_i trace((O_i + epsilon I)^{-1}); +infinity when epsilon = 0
/// and some O_i is singular.
double oho_cost(const OneHopGramians& grams, double epsilon);

}  // namespace resilience
