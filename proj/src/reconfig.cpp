#include "resilience/reconfig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "resilience/errors.hpp"

namespace resilience {

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

bool flip_less(const EdgeFlip& a, const EdgeFlip& b) {
  if (a.i != b.i) return a.i < b.i;
  if (a.j != b.j) return a.j < b.j;
  return a.op < b.op;  // Add < Remove
}

bool flip_list_less(const std::vector<EdgeFlip>& a,
                    const std::vector<EdgeFlip>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      flip_less);
}

// Tie chain: cost, then fewer flips, then lexicographically smallest set.
bool candidate_better(const BudgetedStep& a, const BudgetedStep& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.flips.size() != b.flips.size()) return a.flips.size() < b.flips.size();
  return flip_list_less(a.flips, b.flips);
}

double regularized_cost(const ReconfigProblem& p, const Graph& g) {
  return oho_cost(one_hop_gramians(g, p.gamma, p.grams), p.epsilon);
}

// Visits every flip subset of size <= budget in canonical (size-major,
// pair-lexicographic) order.
template <typename Fn>
void for_each_flip_subset(const std::vector<std::pair<int, int>>& pairs,
                          int budget, Fn&& fn) {
  const int m = static_cast<int>(pairs.size());
  std::vector<int> chosen;
  auto recurse = [&](auto&& self, int start) -> void {
    fn(chosen);
    if (static_cast<int>(chosen.size()) == budget) return;
    for (int k = start; k < m; ++k) {
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
}

BudgetedStep make_candidate(const ReconfigProblem& p, const Graph& base,
                            const std::vector<std::pair<int, int>>& pairs,
                            const std::vector<int>& subset) {
  BudgetedStep cand{base, 0.0, {}};
  for (int k : subset) {
    const auto [i, j] = pairs[k];
    cand.flips.push_back(
        {i, j, base.edge(i, j) ? FlipOp::Remove : FlipOp::Add});
    cand.graph.set_edge(i, j, !base.edge(i, j));
  }
  cand.cost = regularized_cost(p, cand.graph);
  return cand;
}

GramianSet require_grams(const ReconfigProblem& p) {
  if (p.grams.thetas.size() != p.lib.entries.size())
    throw std::invalid_argument("reconfig: GramianSet does not match library");
  return p.grams;
}

void check_problem(const ReconfigProblem& p) {
  p.lib.validate();
  require_grams(p);
  if (p.gamma.rows() != p.prev_graph.size())
    throw std::invalid_argument("reconfig: gamma rows != robot count");
  if (p.budget < 1) throw std::invalid_argument("reconfig: budget must be >= 1");
}

// Forced progress when the budgeted step keeps returning the base graph
// while the team is still not OHO: take the best strictly cost-improving
// flip set; failing that, add the edge that most lifts the currently
// singular one-hop Gramians.
BudgetedStep plateau_escape(const ReconfigProblem& p, const Graph& base) {
  const auto pairs = all_pairs(base.size());
  const double base_cost = regularized_cost(p, base);

  std::optional<BudgetedStep> best;
  for_each_flip_subset(pairs, p.budget, [&](const std::vector<int>& subset) {
    if (subset.empty()) return;
    BudgetedStep cand = make_candidate(p, base, pairs, subset);
    if (!is_connected(cand.graph)) return;
    if (!(cand.cost < base_cost)) return;
    if (!best || candidate_better(cand, *best)) best = std::move(cand);
  });
  if (best) return *best;

  // No improving flip: lift the singular one-hop Gramians directly.
  const OneHopGramians current = one_hop_gramians(base, p.gamma, p.grams);
  std::vector<int> singular;
  for (int i = 0; i < base.size(); ++i)
    if (min_eigenvalue(current.grams[i]) <= kGramianEigTol)
      singular.push_back(i);

  std::optional<BudgetedStep> escape;
  double escape_score = -std::numeric_limits<double>::infinity();
  for (const auto& [i, j] : pairs) {
    if (base.edge(i, j)) continue;
    Graph g = base.flipped(i, j);
    const OneHopGramians oh = one_hop_gramians(g, p.gamma, p.grams);
    double score = std::numeric_limits<double>::infinity();
    for (int s : singular)
      score = std::min(score, min_eigenvalue(oh.grams[s]));
    if (score > escape_score) {
      escape_score = score;
      escape = BudgetedStep{std::move(g),
                            oho_cost(oh, p.epsilon),
                            {{i, j, FlipOp::Add}}};
    }
  }
  if (!escape)
    throw IterationCapError(
        "reconfig: no escape edge available (graph already complete)");
  return *escape;
}

}  // namespace

BudgetedStep solve_budgeted_step(const ReconfigProblem& problem,
                                 const Graph& base) {
  check_problem(problem);
  if (base.size() != problem.prev_graph.size())
    throw std::invalid_argument("solve_budgeted_step: base size mismatch");
  const auto pairs = all_pairs(base.size());

  std::optional<BudgetedStep> best;
  for_each_flip_subset(pairs, problem.budget,
                       [&](const std::vector<int>& subset) {
                         BudgetedStep cand =
                             make_candidate(problem, base, pairs, subset);
                         if (!is_connected(cand.graph)) return;
                         if (!best || candidate_better(cand, *best))
                           best = std::move(cand);
                       });
  if (!best)
    throw InfeasibleError(
        "solve_budgeted_step: no connected candidate within budget");
  return *best;
}

ReconfigSolution comm_graph_gen(const ReconfigProblem& problem) {
  check_problem(problem);
  const int n = problem.prev_graph.size();

  if (!is_observable(problem.a_e,
                     team_measurement_matrix(problem.gamma, problem.lib),
                     problem.rank_tol))
    throw InfeasibleError("comm_graph_gen: team not collectively observable");

  auto team_oho = [&](const Graph& g) {
    return is_team_oho(problem.a_e, g, problem.gamma, problem.lib,
                       problem.rank_tol);
  };
  auto final_cost = [&](const Graph& g) {
    return oho_cost(one_hop_gramians(g, problem.gamma, problem.grams), 0.0);
  };

  if (team_oho(problem.prev_graph))
    return {problem.prev_graph, {}, final_cost(problem.prev_graph), 0};

  const int cap =
      problem.max_outer_iters > 0 ? problem.max_outer_iters : n * (n - 1) / 2;
  Graph base = problem.prev_graph;
  std::vector<EdgeFlip> flips;
  for (int iter = 1; iter <= cap; ++iter) {
    BudgetedStep step = solve_budgeted_step(problem, base);
    if (step.flips.empty()) step = plateau_escape(problem, base);
    base = step.graph;
    flips.insert(flips.end(), step.flips.begin(), step.flips.end());
    if (team_oho(base)) return {base, flips, final_cost(base), iter};
  }
  throw IterationCapError("comm_graph_gen: iteration cap exceeded (" +
                          std::to_string(cap) + ")");
}

bool verify_solution(const ReconfigProblem& problem,
                     const ReconfigSolution& solution,
                     std::vector<std::string>* diagnostics) {
  std::vector<std::string> notes;

  if (!is_connected(solution.new_graph)) notes.push_back("graph not connected");
  if (!is_team_oho(problem.a_e, solution.new_graph, problem.gamma, problem.lib,
                   problem.rank_tol))
    notes.push_back("team not one-hop observable");

  Graph replay = problem.prev_graph;
  for (const auto& f : solution.flips) {
    const bool present = replay.edge(f.i, f.j);
    if (present == (f.op == FlipOp::Add)) {
      notes.push_back("flip list inconsistent with previous graph");
      break;
    }
    replay.set_edge(f.i, f.j, f.op == FlipOp::Add);
  }
  if (!(replay == solution.new_graph))
    notes.push_back("flip list does not reproduce new graph");
  if (edge_flip_distance(problem.prev_graph, solution.new_graph) >
      static_cast<int>(solution.flips.size()))
    notes.push_back("flip distance exceeds flip count");
  if (static_cast<int>(solution.flips.size()) >
      problem.budget * std::max(solution.outer_iters, 0))
    notes.push_back("flip count exceeds budget * outer_iters");

  const double fresh =
      oho_cost(one_hop_gramians(solution.new_graph, problem.gamma,
                                problem.grams),
               0.0);
  const bool cost_ok =
      (std::isinf(fresh) && std::isinf(solution.cost)) ||
      std::abs(fresh - solution.cost) <= 1e-12 * std::max(1.0, std::abs(fresh));
  if (!cost_ok) notes.push_back("reported cost does not match evaluation");

  if (diagnostics) *diagnostics = notes;
  return notes.empty();
}

}  // namespace resilience
