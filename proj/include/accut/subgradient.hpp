#ifndef ACCUT_SUBGRADIENT_HPP
#define ACCUT_SUBGRADIENT_HPP

#include <span>
#include <vector>

#include "accut/functionals.hpp"
#include "accut/graph.hpp"
#include "accut/rng.hpp"
#include "accut/state_vector.hpp"

namespace accut {

enum class Objective { anti, maxcut };

// Per-vertex edge-order statistics at x, with ties resolved toward larger
// magnitude. value[] is the indicator used to order equal-valued vertices
// before extracting a total-variation subgradient.
struct BoundaryIndicator {
  std::vector<double> value;
  std::vector<double> lower_minus_upper;  // weight toward strictly lower neighbors
                                          // minus weight toward strictly higher ones
  std::vector<double> tie_weight;         // weight toward equal-valued neighbors
};

// Indicator for the maxcut scheme: ties push peak vertices inward and
// interior vertices toward whichever side their strict imbalance points to.
BoundaryIndicator maxcut_indicator(const Graph& g, const StateVector& x);

// Total order of the vertices, ascending by (x_i, key_i); exact ties drawn
// uniformly at random per call.
struct VertexOrder {
  std::vector<int> order;  // order[pos] = vertex
  std::vector<int> rank;   // rank[vertex] = pos
};

VertexOrder order_by_value_then_key(const StateVector& x, std::span<const double> key, Rng& rng);

// Total-variation subgradient induced by a vertex order: each edge
// contributes its weight signed by the endpoints' relative rank. Valid for
// any order that sorts x ascending.
std::vector<double> select_u(const Graph& g, const VertexOrder& order);

// One admissible descent direction for the current iterate. combined is the
// vector handed to the inner subproblem:
//   anti:   (cut_grad + rate * balance_grad) / (2 vol)
//   maxcut: cut_grad / vol
struct SubgradientBundle {
  Objective objective = Objective::anti;
  double rate = 0.0;        // rate the selection was built for (0 for maxcut)
  double alpha_used = 0.0;  // median representative (anti schemes)
  std::vector<double> cut_grad;
  std::vector<double> balance_grad;
  std::vector<double> combined;
};

// Baseline anti-Cheeger selection: the maxcut indicator orders ties and the
// median subgradient is picked independently of the order.
SubgradientBundle select_cia0(const Graph& g, const StateVector& x, double rate, Rng& rng);

// Boundary-aware anti-Cheeger selection. The tie indicator folds the rate and
// a median subdifferential element into the ordering, and when the median
// level set has two or more vertices the balance part concentrates its slack
// on one pivot vertex of the level-set block (first block position when the
// level sits at the positive peak, last when at the negative peak, the
// larger-indicator end when strictly inside), which is what makes stalls
// certify local optimality.
SubgradientBundle select_cia1(const Graph& g, const StateVector& x, double rate, Rng& rng);

// Maxcut selection: no balance term.
SubgradientBundle select_maxcut(const Graph& g, const StateVector& x, Rng& rng);

}  // namespace accut

#endif
