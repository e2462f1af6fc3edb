#pragma once

#include <Eigen/Dense>
#include <random>

namespace resilience {

/// Exact zero-order-hold realization of (A_e, B_e, Q) at step dt.
struct DiscretizedModel {
  Eigen::MatrixXd a_d;
  Eigen::VectorXd b_d;
  Eigen::MatrixXd q_d;
  double dt = 0.0;
};

DiscretizedModel discretize(const Eigen::MatrixXd& a_e,
                            const Eigen::VectorXd& b_e,
                            const Eigen::MatrixXd& q, double dt);

/// Draw w ~ N(0, q_d) through the PSD square root of q_d.
Eigen::VectorXd sample_zoh_noise(const DiscretizedModel& model,
                                 std::mt19937_64& rng);

struct KalmanState {
  Eigen::VectorXd xhat;
  Eigen::MatrixXd p;
};

/// Predict with (a_d, b_d, q_d), then Joseph-form update when h has rows.
/// r_cov must be symmetric positive definite on the measurement space.
KalmanState kf_step(const KalmanState& state, const DiscretizedModel& model,
                    double u, const Eigen::VectorXd& y,
                    const Eigen::MatrixXd& h, const Eigen::MatrixXd& r_cov);

struct AxisErrorSummary {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Per-axis statistics of |xhat - e| over drones, for states laid out as
/// (x, y, z) triples per drone.
struct EstimateErrorSummary {
  AxisErrorSummary x, y, z;
};

EstimateErrorSummary robot_estimate_error(const KalmanState& state,
                                          const Eigen::VectorXd& true_e);

}  // namespace resilience
