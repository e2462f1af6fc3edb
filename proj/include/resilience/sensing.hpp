#pragma once

#include <Eigen/Dense>
#include <vector>

#include "resilience/graph.hpp"

namespace resilience {

// Relative SVD cutoff for numerical rank decisions.
inline constexpr double kRankTol = 1e-8;

/// The r sensor-wise output matrices; entry k maps process state to the
/// measurement rows produced by sensor k.
struct SensorLibrary {
  std::vector<Eigen::MatrixXd> entries;  // each m_k x state_dim
  int state_dim = 0;

  int num_sensors() const { return static_cast<int>(entries.size()); }
  void validate() const;
};

// Binary robots x resources matrix; entry (i, k) = 1 iff robot i carries
// sensor k.
using ResourceMatrix = Eigen::MatrixXi;

struct FailureEvent {
  int iteration = 0;
  int robot = 0;     // 0-based
  int resource = 0;  // 0-based
};

enum class FailureClass { Tolerable, Catastrophic };

/// The paper-style team tuple: graph, positions, resource matrix.
struct Configuration {
  Graph graph;
  Positions positions;
  ResourceMatrix gamma;
};

/// Vertical stack of the sensor matrices robot i carries, in ascending
/// resource index; 0 x state_dim when the robot is sensorless.
Eigen::MatrixXd robot_measurement_matrix(const ResourceMatrix& gamma,
                                         const SensorLibrary& lib, int robot);

/// Stack of robot_measurement_matrix over the closed neighborhood of robot i,
/// in ascending robot index.
Eigen::MatrixXd one_hop_measurement_matrix(const Graph& g,
                                           const ResourceMatrix& gamma,
                                           const SensorLibrary& lib, int robot);

/// Stack of every robot's measurement matrix (the team matrix H).
Eigen::MatrixXd team_measurement_matrix(const ResourceMatrix& gamma,
                                        const SensorLibrary& lib);

/// Copy of gamma with the failed entry cleared; the entry must be set.
ResourceMatrix apply_failure(const ResourceMatrix& gamma,
                             const FailureEvent& ev);

/// Numerical-rank test on the stacked observability matrix
/// [h; hA; ...; hA^(n-1)].
bool is_observable(const Eigen::MatrixXd& a_e, const Eigen::MatrixXd& h,
                   double tol = kRankTol);

/// Tolerable iff the post-failure team is still collectively observable.
FailureClass classify_failure(const ResourceMatrix& gamma_after,
                              const Eigen::MatrixXd& a_e,
                              const SensorLibrary& lib, double tol = kRankTol);

}  // namespace resilience
