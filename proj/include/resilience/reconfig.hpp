#pragma once

#include <string>
#include <vector>

#include "resilience/gramian.hpp"
#include "resilience/graph.hpp"
#include "resilience/sensing.hpp"

namespace resilience {

// In-loop regularizer so that non-OHO candidates compare by how singular
// they are; reported costs always use epsilon = 0.
inline constexpr double kReconfigEpsilon = 1e-9;

enum class FlipOp { Add, Remove };

struct EdgeFlip {
  int i = 0;  // i < j
  int j = 0;
  FlipOp op = FlipOp::Add;

  bool operator==(const EdgeFlip&) const = default;
};

struct ReconfigProblem {
  Graph prev_graph;
  ResourceMatrix gamma;
  Eigen::MatrixXd a_e;
  SensorLibrary lib;
  GramianSet grams;
  int budget = 1;           // edge flips per solve (the paper steps with 1)
  int max_outer_iters = 0;  // 0 selects the n(n-1)/2 hard cap
  double epsilon = kReconfigEpsilon;
  double rank_tol = kRankTol;
};

struct ReconfigSolution {
  Graph new_graph;
  std::vector<EdgeFlip> flips;  // in application order across outer iterations
  double cost = 0.0;            // epsilon = 0 evaluation of new_graph
  int outer_iters = 0;
};

struct BudgetedStep {
  Graph graph;
  double cost = 0.0;  // regularized
  std::vector<EdgeFlip> flips;
};

/// Exact minimizer of the regularized cost over all connected graphs within
/// edge_flip_distance <= budget of base (the no-flip candidate included).
/// Ties: lower cost, then fewer flips, then lexicographically smallest flip
/// set by (pair, add < remove). Throws InfeasibleError when no candidate is
/// connected.
BudgetedStep solve_budgeted_step(const ReconfigProblem& problem,
                                 const Graph& base);

/// The full reconfiguration loop: collective-observability gate, early exit
/// when the previous graph is already OHO, then budgeted steps until the team
/// is OHO. Throws InfeasibleError / IterationCapError.
ReconfigSolution comm_graph_gen(const ReconfigProblem& problem);

/// Independent recheck of connectivity, team OHO, flip accounting and the
/// reported cost. Returns false and fills diagnostics on any mismatch.
bool verify_solution(const ReconfigProblem& problem,
                     const ReconfigSolution& solution,
                     std::vector<std::string>* diagnostics = nullptr);

}  // namespace resilience
