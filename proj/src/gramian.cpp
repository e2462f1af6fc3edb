#include "resilience/gramian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "resilience/errors.hpp"

namespace resilience {

Eigen::MatrixXd sensor_gramian(const Eigen::MatrixXd& a_e,
                               const Eigen::MatrixXd& h, double horizon) {
  const Eigen::Index n = a_e.rows();
  if (a_e.cols() != n) throw std::invalid_argument("a_e must be square");
  if (h.cols() != n) throw std::invalid_argument("h width must match a_e");
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  if (h.rows() == 0) return Eigen::MatrixXd::Zero(n, n);

  // Van Loan block: expm([[ -A^T, H^T H ], [ 0, A ]] T) yields e^{A T} in the
  // lower-right block F22 and F12 with Gramian = F22^T F12.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = -a_e.transpose();
  m.topRightCorner(n, n) = h.transpose() * h;
  m.bottomRightCorner(n, n) = a_e;
  const Eigen::MatrixXd em = (m * horizon).exp();
  Eigen::MatrixXd g =
      em.bottomRightCorner(n, n).transpose() * em.topRightCorner(n, n);
  if (!g.allFinite())
    throw NumericError("sensor_gramian: non-finite result (horizon " +
                       std::to_string(horizon) + ", state dim " +
                       std::to_string(n) + ")");
  return 0.5 * (g + g.transpose());
}

GramianSet compute_gramian_set(const Eigen::MatrixXd& a_e,
                               const SensorLibrary& lib, double horizon) {
  lib.validate();
  GramianSet set;
  set.horizon = horizon;
  set.thetas.reserve(lib.entries.size());
  for (const auto& h : lib.entries)
    set.thetas.push_back(sensor_gramian(a_e, h, horizon));
  for (const auto& theta : set.thetas)
    if (min_eigenvalue(theta) < -1e-10)
      throw NumericError("compute_gramian_set: sensor Gramian not PSD");
  return set;
}

OneHopGramians one_hop_gramians(const Graph& g, const ResourceMatrix& gamma,
                                const GramianSet& set) {
  const int n = g.size();
  const int r = static_cast<int>(set.thetas.size());
  if (gamma.rows() != n || gamma.cols() != r)
    throw std::invalid_argument("one_hop_gramians: dimension mismatch");
  const Eigen::Index ne = set.thetas.empty() ? 0 : set.thetas[0].rows();

  OneHopGramians out;
  out.grams.reserve(n);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd o = Eigen::MatrixXd::Zero(ne, ne);
    for (int k = 0; k < r; ++k) {
      // [Abar Gamma]_{i,k}: robots in the closed neighborhood carrying k,
      // counted with multiplicity.
      int weight = gamma(i, k);
      for (int j = 0; j < n; ++j)
        if (j != i && g.edge(i, j)) weight += gamma(j, k);
      if (weight != 0) o += static_cast<double>(weight) * set.thetas[k];
    }
    out.grams.push_back(std::move(o));
  }
  return out;
}

double min_eigenvalue(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym,
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

bool is_robot_oho(const Eigen::MatrixXd& a_e, const Graph& g,
                  const ResourceMatrix& gamma, const SensorLibrary& lib,
                  int robot, double tol, const GramianSet* grams,
                  double gram_tol) {
  const bool rank_ok =
      is_observable(a_e, one_hop_measurement_matrix(g, gamma, lib, robot), tol);
  if (grams != nullptr) {
    const OneHopGramians oh = one_hop_gramians(g, gamma, *grams);
    const bool gram_ok = min_eigenvalue(oh.grams[robot]) > gram_tol;
    if (gram_ok != rank_ok)
      throw NumericError(
          "is_robot_oho: rank and Gramian tests disagree for robot " +
          std::to_string(robot) + " (ill-conditioned horizon?)");
  }
  return rank_ok;
}

bool is_team_oho(const Eigen::MatrixXd& a_e, const Graph& g,
                 const ResourceMatrix& gamma, const SensorLibrary& lib,
                 double tol, const GramianSet* grams, double gram_tol) {
  for (int i = 0; i < g.size(); ++i)
    if (!is_robot_oho(a_e, g, gamma, lib, i, tol, grams, gram_tol))
      return false;
  return true;
}

double oho_cost(const OneHopGramians& grams, double epsilon) {
  if (epsilon < 0.0) throw std::invalid_argument("epsilon must be >= 0");
  if (grams.grams.empty()) return 0.0;
  double total = 0.0;
  for (const auto& o : grams.grams) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(o,
                                                      Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double lam_max = ev.size() ? ev(ev.size() - 1) : 0.0;
    const double singular_cut = 1e-12 * std::max(1.0, lam_max);
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      const double lam = ev(i) + epsilon;
      if (lam <= (epsilon == 0.0 ? singular_cut : 0.0))
        return std::numeric_limits<double>::infinity();
      total += 1.0 / lam;
    }
  }
  return total / static_cast<double>(grams.grams.size());
}

}  // namespace resilience
