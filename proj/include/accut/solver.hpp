#ifndef ACCUT_SOLVER_HPP
#define ACCUT_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "accut/graph.hpp"
#include "accut/inner_solver.hpp"
#include "accut/rng.hpp"
#include "accut/state_vector.hpp"
#include "accut/subgradient.hpp"

namespace accut {

enum class Algo { cia0, cia1, cia2 };

struct SolverConfig {
  NormP p = NormP::one;
  int t_tot = 100;        // iteration budget per run (cia2: across both modes)
  int t_eq = 3;           // consecutive equal rates before cia2 switches mode
  int l_pop = 20;         // population size per round
  std::uint64_t seed = 0;
  double eq_tol = 1e-12;  // relative tolerance for "rate unchanged"
  int restarts = 100;     // independent runs for cia0/cia1
};

struct TraceEntry {
  int step = 0;
  Objective mode = Objective::anti;
  double rate = 0.0;
};

struct RunRecord {
  std::vector<TraceEntry> trace;  // entry 0 is the initial iterate
  VertexSet final_cut;            // rounded from the best anti iterate
  double final_anti = 0.0;        // discrete ratio of final_cut
  double final_max = 0.0;         // discrete maxcut ratio rounded likewise
  double best_anti = 0.0;         // best continuous anti value seen
  double best_max = 0.0;          // best continuous maxcut value seen
  std::vector<double> best_anti_x;
  int switches = 0;
  std::uint64_t seed = 0;
  bool converged_local = false;
};

// Leading eigenvector direction of the graph Laplacian by power iteration,
// scaled to unit p-norm. Deterministic: the start vector alternates +1/-1.
StateVector init_spectral(const Graph& g, NormP p = NormP::one, double tol = 1e-8,
                          int max_iter = 5000);

// Mutable state threaded through the iteration.
struct IterationState {
  int step = 0;
  StateVector x;
  double rate = 0.0;
  Objective mode = Objective::anti;
  int stall = 0;  // consecutive steps with an unchanged rate
  SubgradientBundle bundle;
  double best_anti = 0.0;
  double best_max = 0.0;
  std::vector<double> best_anti_x;
  std::vector<double> best_max_x;
};

IterationState make_state(const Graph& g, const StateVector& x0, Objective mode, Algo algo,
                          Rng& rng);

// One three-step update: solve the inner subproblem at the current rate
// (clamped to the terminal value when they agree to rounding), refresh the
// rate from the new iterate, and reselect the subgradient bundle.
void cia_step(const Graph& g, IterationState& st, const SolverConfig& cfg, Algo algo,
              Rng& rng);

// Fixed-budget anti-Cheeger run (cia0 or cia1). x0 == nullptr starts from the
// spectral vector.
RunRecord run_single(const Graph& g, Algo algo, const SolverConfig& cfg, std::uint64_t seed,
                     const StateVector* x0 = nullptr);

// Mode-alternating run: starts on the anti objective, swaps objectives after
// t_eq stalled steps (the swap itself costs no step), and keeps the best
// iterate for each objective across the whole budget.
RunRecord run_cia2(const Graph& g, const SolverConfig& cfg, std::uint64_t seed,
                   const StateVector* x0 = nullptr);

struct RestartResult {
  RunRecord best;              // highest final_anti, lowest run index on ties
  std::vector<double> values;  // final_anti per run, in run order
};

// cfg.restarts independent runs from the shared spectral start, seeded
// deterministically from cfg.seed and executed in parallel (ACCUT_THREADS
// overrides the worker count; results do not depend on it).
RestartResult run_restarts(const Graph& g, Algo algo, const SolverConfig& cfg);

struct PopulationResult {
  RunRecord best;  // record of the winning member of the last round
  int rounds = 0;
  std::vector<double> value_history;  // best continuous anti value per round
};

// Population protocol over run_cia2: every member of a round starts from the
// previous round's best iterate (round 1 from the spectral vector) and the
// rounds stop once the best value stops improving.
PopulationResult run_population(const Graph& g, const SolverConfig& cfg);

// True when no single-coordinate sign flip improves the anti objective by
// more than tol (relative to max(1, current value)).
bool certify_local(const Graph& g, const StateVector& x, double tol = 1e-12);

}  // namespace accut

#endif
