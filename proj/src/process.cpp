#include "resilience/process.hpp"

#include <cmath>
#include <stdexcept>

namespace resilience {

std::pair<Eigen::MatrixXd, Eigen::VectorXd> build_process_matrices(
    int n_drones, double theta) {
  if (n_drones < 2) throw std::invalid_argument("need at least two drones");
  const int n = 3 * n_drones;
  Eigen::Matrix2d rot;
  rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n_drones; ++i) {
    const int pred = (i + n_drones - 1) % n_drones;
    a.block<2, 2>(3 * i, 3 * pred) += rot;
    a.block<2, 2>(3 * i, 3 * i) -= rot;
    if (i > 0) {
      // follower altitude chases the predecessor
      a(3 * i + 2, 3 * pred + 2) = 1.0;
      a(3 * i + 2, 3 * i + 2) = -1.0;
    }
  }
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(2) = 1.0;  // leader altitude rate is the external input
  return {a, b};
}

ProcessModel make_process_model(int n_drones, double theta, double noise_q,
                                const SinusoidInput& leader_input) {
  if (noise_q < 0.0) throw std::invalid_argument("noise_q must be >= 0");
  ProcessModel model;
  model.n_drones = n_drones;
  std::tie(model.a_e, model.b_e) = build_process_matrices(n_drones, theta);
  model.q = noise_q * Eigen::MatrixXd::Identity(3 * n_drones, 3 * n_drones);
  model.leader_input = leader_input;
  return model;
}

ProcessState initial_circle(int n_drones, double radius, double z0) {
  if (n_drones < 1) throw std::invalid_argument("need at least one drone");
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  ProcessState state;
  state.e.resize(3 * n_drones);
  for (int i = 0; i < n_drones; ++i) {
    const double ang = 2.0 * M_PI * i / n_drones;
    state.e(3 * i) = radius * std::cos(ang);
    state.e(3 * i + 1) = radius * std::sin(ang);
    state.e(3 * i + 2) = z0;
  }
  state.t = 0.0;
  return state;
}

ProcessState simulate_step(const ProcessModel& model,
                           const DiscretizedModel& disc,
                           const ProcessState& state, std::mt19937_64& rng) {
  ProcessState next;
  next.e = disc.a_d * state.e + disc.b_d * model.leader_input(state.t);
  if ((model.q.array() != 0.0).any()) next.e += sample_zoh_noise(disc, rng);
  next.t = state.t + disc.dt;
  return next;
}

}  // namespace resilience
