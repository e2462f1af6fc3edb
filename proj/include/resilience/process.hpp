#pragma once

#include <Eigen/Dense>
#include <random>
#include <utility>

#include "resilience/estimator.hpp"

namespace resilience {

struct SinusoidInput {
  double amplitude = 0.1;  // m/s
  double omega = 0.5;      // rad/s
  double phase = 0.0;

  double operator()(double t) const {
    return amplitude * std::sin(omega * t + phase);
  }
};

/// Exogenous drone-team process: cyclic pursuit in the plane, leader-follower
/// in altitude, with the leader's vertical rate driven externally.
struct ProcessModel {
  int n_drones = 0;
  Eigen::MatrixXd a_e;  // 3 n_d x 3 n_d
  Eigen::VectorXd b_e;  // unit entry at the leader's z rate
  Eigen::MatrixXd q;    // process noise covariance
  SinusoidInput leader_input;
};

struct ProcessState {
  Eigen::VectorXd e;  // (x, y, z) per drone
  double t = 0.0;
};

/// Assemble (A_e, B_e) from the pursuit angle theta; drone 0 is the leader
/// chasing the last drone, drones i >= 1 chase drone i - 1.
std::pair<Eigen::MatrixXd, Eigen::VectorXd> build_process_matrices(
    int n_drones, double theta);

ProcessModel make_process_model(int n_drones, double theta, double noise_q,
                                const SinusoidInput& leader_input);

/// Drones equally spaced on a circle of the given radius at height z0.
ProcessState initial_circle(int n_drones, double radius, double z0);

/// One exact ZOH step with held input u_e(t) and w ~ N(0, Q_d).
ProcessState simulate_step(const ProcessModel& model,
                           const DiscretizedModel& disc,
                           const ProcessState& state, std::mt19937_64& rng);

}  // namespace resilience
