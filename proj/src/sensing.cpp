#include "resilience/sensing.hpp"

#include <Eigen/SVD>
#include <stdexcept>

namespace resilience {

void SensorLibrary::validate() const {
  if (entries.empty()) throw std::invalid_argument("sensor library is empty");
  if (state_dim < 1) throw std::invalid_argument("state_dim must be >= 1");
  for (const auto& h : entries) {
    if (h.cols() != state_dim)
      throw std::invalid_argument("sensor column count must equal state_dim");
    if (!h.allFinite())
      throw std::invalid_argument("sensor matrices must be finite");
  }
}

namespace {

void check_gamma(const ResourceMatrix& gamma, const SensorLibrary& lib) {
  if (gamma.cols() != lib.num_sensors())
    throw std::invalid_argument("resource matrix width != library size");
}

}  // namespace

Eigen::MatrixXd robot_measurement_matrix(const ResourceMatrix& gamma,
                                         const SensorLibrary& lib, int robot) {
  check_gamma(gamma, lib);
  if (robot < 0 || robot >= gamma.rows())
    throw std::invalid_argument("robot index out of range");
  Eigen::Index rows = 0;
  for (int k = 0; k < gamma.cols(); ++k)
    if (gamma(robot, k) != 0) rows += lib.entries[k].rows();
  Eigen::MatrixXd h(rows, lib.state_dim);
  Eigen::Index at = 0;
  for (int k = 0; k < gamma.cols(); ++k) {
    if (gamma(robot, k) == 0) continue;
    h.middleRows(at, lib.entries[k].rows()) = lib.entries[k];
    at += lib.entries[k].rows();
  }
  return h;
}

Eigen::MatrixXd one_hop_measurement_matrix(const Graph& g,
                                           const ResourceMatrix& gamma,
                                           const SensorLibrary& lib,
                                           int robot) {
  std::vector<Eigen::MatrixXd> blocks;
  Eigen::Index rows = 0;
  for (int j = 0; j < g.size(); ++j) {
    if (j != robot && !g.edge(robot, j)) continue;
    blocks.push_back(robot_measurement_matrix(gamma, lib, j));
    rows += blocks.back().rows();
  }
  Eigen::MatrixXd h(rows, lib.state_dim);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    h.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return h;
}

Eigen::MatrixXd team_measurement_matrix(const ResourceMatrix& gamma,
                                        const SensorLibrary& lib) {
  std::vector<Eigen::MatrixXd> blocks;
  Eigen::Index rows = 0;
  for (int i = 0; i < gamma.rows(); ++i) {
    blocks.push_back(robot_measurement_matrix(gamma, lib, i));
    rows += blocks.back().rows();
  }
  Eigen::MatrixXd h(rows, lib.state_dim);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    h.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return h;
}

ResourceMatrix apply_failure(const ResourceMatrix& gamma,
                             const FailureEvent& ev) {
  if (ev.robot < 0 || ev.robot >= gamma.rows() || ev.resource < 0 ||
      ev.resource >= gamma.cols())
    throw std::invalid_argument("failure event index out of range");
  if (gamma(ev.robot, ev.resource) == 0)
    throw std::invalid_argument("failure of absent resource");
  ResourceMatrix out = gamma;
  out(ev.robot, ev.resource) = 0;
  return out;
}

bool is_observable(const Eigen::MatrixXd& a_e, const Eigen::MatrixXd& h,
                   double tol) {
  const Eigen::Index n = a_e.rows();
  if (a_e.cols() != n) throw std::invalid_argument("a_e must be square");
  if (h.cols() != n)
    throw std::invalid_argument("h column count must match state dimension");
  if (h.rows() == 0) return n == 0;

  Eigen::MatrixXd obs(h.rows() * n, n);
  Eigen::MatrixXd block = h;
  for (Eigen::Index k = 0; k < n; ++k) {
    obs.middleRows(k * h.rows(), h.rows()) = block;
    if (k + 1 < n) block = block * a_e;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(obs);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return false;
  const double cutoff = tol * sv(0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank == n;
}

FailureClass classify_failure(const ResourceMatrix& gamma_after,
                              const Eigen::MatrixXd& a_e,
                              const SensorLibrary& lib, double tol) {
  return is_observable(a_e, team_measurement_matrix(gamma_after, lib), tol)
             ? FailureClass::Tolerable
             : FailureClass::Catastrophic;
}

}  // namespace resilience
