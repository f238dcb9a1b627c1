#ifndef ACCUT_ORACLE_HPP
#define ACCUT_ORACLE_HPP

#include <cstdint>
#include <span>

#include "accut/graph.hpp"
#include "accut/inner_solver.hpp"
#include "accut/rng.hpp"
#include "accut/subgradient.hpp"

namespace accut {

struct OracleResult {
  double best_value = 0.0;
  VertexSet best_set;
  std::uint64_t evaluated = 0;  // subsets visited (vertex 0 pinned to one side)
};

// Exact optimum of the chosen discrete objective by Gray-code enumeration of
// all 2^(n-1) splits. Rejects graphs with more than 24 vertices.
OracleResult exhaustive_best(const Graph& g, Objective objective);

// Checks an inner-subproblem answer against its own claims and against
// sampled feasible points: the candidate must sit on the unit sphere of p,
// reproduce its reported value, and undercut every sample (tolerance 1e-9).
bool verify_inner(double rate, std::span<const double> v, NormP p, const InnerSolution& sol,
                  int samples, Rng& rng);

// Checks the subdifferential certificates of a bundle: the cut part must be
// tight at x and global for sampled directions, likewise the balance part
// (which must also sum to zero; maxcut bundles must carry a zero balance
// part). Tolerance scales with max(1, vol).
bool verify_membership(const Graph& g, const StateVector& x, const SubgradientBundle& bundle,
                       int samples, Rng& rng);

}  // namespace accut

#endif
