#include "resilience/estimator.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "resilience/errors.hpp"

namespace resilience {

DiscretizedModel discretize(const Eigen::MatrixXd& a_e,
                            const Eigen::VectorXd& b_e,
                            const Eigen::MatrixXd& q, double dt) {
  const Eigen::Index n = a_e.rows();
  if (a_e.cols() != n || b_e.size() != n || q.rows() != n || q.cols() != n)
    throw std::invalid_argument("discretize: dimension mismatch");
  if (!(dt > 0.0)) throw std::invalid_argument("discretize: dt must be > 0");

  DiscretizedModel out;
  out.dt = dt;

  // [A_d, B_d; 0, 1] = expm([A, B; 0, 0] dt)
  Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(n + 1, n + 1);
  aug.topLeftCorner(n, n) = a_e;
  aug.topRightCorner(n, 1) = b_e;
  const Eigen::MatrixXd eaug = (aug * dt).exp();
  out.a_d = eaug.topLeftCorner(n, n);
  out.b_d = eaug.topRightCorner(n, 1);

  // Van Loan: expm([-A, Q; 0, A^T] dt) = [.., G; 0, F], Q_d = F^T G.
  Eigen::MatrixXd vl = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  vl.topLeftCorner(n, n) = -a_e;
  vl.topRightCorner(n, n) = q;
  vl.bottomRightCorner(n, n) = a_e.transpose();
  const Eigen::MatrixXd evl = (vl * dt).exp();
  Eigen::MatrixXd qd = evl.bottomRightCorner(n, n).transpose() *
                       evl.topRightCorner(n, n);
  out.q_d = 0.5 * (qd + qd.transpose());

  if (!out.a_d.allFinite() || !out.b_d.allFinite() || !out.q_d.allFinite())
    throw NumericError("discretize: non-finite result");
  return out;
}

Eigen::VectorXd sample_zoh_noise(const DiscretizedModel& model,
                                 std::mt19937_64& rng) {
  const Eigen::Index n = model.q_d.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(model.q_d);
  Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd z(n);
  for (Eigen::Index i = 0; i < n; ++i) z(i) = gauss(rng);
  return es.eigenvectors() * lam.cwiseSqrt().asDiagonal() * z;
}

KalmanState kf_step(const KalmanState& state, const DiscretizedModel& model,
                    double u, const Eigen::VectorXd& y,
                    const Eigen::MatrixXd& h, const Eigen::MatrixXd& r_cov) {
  const Eigen::Index n = state.xhat.size();
  if (h.cols() != n || h.rows() != y.size())
    throw std::invalid_argument("kf_step: measurement dimension mismatch");

  KalmanState out;
  out.xhat = model.a_d * state.xhat + model.b_d * u;
  out.p = model.a_d * state.p * model.a_d.transpose() + model.q_d;

  if (h.rows() > 0) {
    if (r_cov.rows() != h.rows() || r_cov.cols() != h.rows())
      throw std::invalid_argument("kf_step: r_cov dimension mismatch");
    const Eigen::MatrixXd s = h * out.p * h.transpose() + r_cov;
    Eigen::LLT<Eigen::MatrixXd> llt(s);
    if (llt.info() != Eigen::Success)
      throw NumericError("kf_step: innovation covariance not invertible");
    const Eigen::MatrixXd k =
        llt.solve(h * out.p.transpose()).transpose();  // P H^T S^-1
    out.xhat += k * (y - h * out.xhat);
    const Eigen::MatrixXd ikh =
        Eigen::MatrixXd::Identity(n, n) - k * h;
    out.p = ikh * out.p * ikh.transpose() + k * r_cov * k.transpose();
  }
  out.p = 0.5 * (out.p + out.p.transpose()).eval();
  return out;
}

EstimateErrorSummary robot_estimate_error(const KalmanState& state,
                                          const Eigen::VectorXd& true_e) {
  const Eigen::Index n = true_e.size();
  if (state.xhat.size() != n)
    throw std::invalid_argument("robot_estimate_error: size mismatch");
  if (n % 3 != 0)
    throw std::invalid_argument(
        "robot_estimate_error: state must hold (x, y, z) per drone");
  const Eigen::Index drones = n / 3;
  const Eigen::VectorXd err = (state.xhat - true_e).cwiseAbs();

  EstimateErrorSummary out;
  AxisErrorSummary* axes[3] = {&out.x, &out.y, &out.z};
  for (int axis = 0; axis < 3; ++axis) {
    double sum = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < drones; ++k) {
      const double v = err(3 * k + axis);
      sum += v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    axes[axis]->mean = sum / static_cast<double>(drones);
    axes[axis]->min = lo;
    axes[axis]->max = hi;
  }
  return out;
}

}  // namespace resilience
