#ifndef ACCUT_FUNCTIONALS_HPP
#define ACCUT_FUNCTIONALS_HPP

#include <vector>

#include "accut/graph.hpp"
#include "accut/state_vector.hpp"

namespace accut {

// Weighted total variation: sum over edges of w_ij |x_i - x_j|. Equals twice
// the cut weight on a two-valued +/-t vector.
double total_variation(const Graph& g, const StateVector& x);

enum class MedianEndpoint { low, high };

// Description of the minimizer interval of c -> sum_i d_i |x_i - c| and of
// the local geometry at one chosen representative alpha.
struct MedianInfo {
  double alpha_lo = 0.0;  // smallest minimizer
  double alpha_hi = 0.0;  // largest minimizer
  double alpha = 0.0;     // chosen representative (one of the endpoints)
  std::vector<int> level_set;      // vertices with x_i == alpha, ascending
  double below_minus_above = 0.0;  // vol{x < alpha} - vol{x > alpha}
  double mass_at = 0.0;            // vol{x == alpha}
};

// Degree-weighted median of the coordinates. Both interval endpoints are
// always attained data values. The default representative is the low
// endpoint. On a graph with zero volume every c minimizes; the interval is
// then [min x, max x] with zero masses.
MedianInfo weighted_median(const Graph& g, const StateVector& x,
                           MedianEndpoint endpoint = MedianEndpoint::low);

// Minimal degree-weighted absolute deviation: sum_i d_i |x_i - alpha|.
// Endpoint-independent.
double median_deviation(const Graph& g, const StateVector& x);

// Continuous anti-Cheeger quotient; its maximum over nonzero x equals the
// discrete optimum, and on a +/-t vector it equals the discrete quotient of
// the positive side. Scale invariant.
double anti_objective(const Graph& g, const StateVector& x);

// Continuous maxcut quotient; dominates the anti quotient pointwise.
double maxcut_objective(const Graph& g, const StateVector& x);

// Convex numerator surrogate used by the iteration:
// (total_variation + rate * median_deviation) / (2 vol).
double surrogate_objective(const Graph& g, const StateVector& x, double rate);

struct RoundedCut {
  VertexSet set;
  double ratio = 0.0;
};

// Sweeps every superlevel set {i : x_i > theta} over the distinct coordinate
// values (plus one theta below the minimum) and keeps the best discrete
// anti quotient. Never worse than rounding at zero.
RoundedCut threshold_round(const Graph& g, const StateVector& x);

// Same sweep keeping the best discrete maxcut quotient instead.
RoundedCut threshold_round_maxcut(const Graph& g, const StateVector& x);

}  // namespace accut

#endif
