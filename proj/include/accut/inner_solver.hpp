#ifndef ACCUT_INNER_SOLVER_HPP
#define ACCUT_INNER_SOLVER_HPP

#include <span>
#include <vector>

#include "accut/rng.hpp"

namespace accut {

enum class NormP { one, two, inf };

double norm_p(std::span<const double> v, NormP p);

// Sorted-magnitude threshold table for the inner subproblem. With |v| sorted
// descending and |v|_{n+1} = 0, margin[m] = sum_{j<=m} (|v|_j - |v|_{m+1})
// measures how far the top-m block dominates the next magnitude; it is
// nondecreasing in m and reaches ||v||_1 at m = n.
struct SupportThresholds {
  std::vector<double> margin;  // margin[m] for m = 0..n; margin[0] = 0
  int cutoff = 0;     // smallest m with margin[m] > rate; n+1 when rate == ||v||_1
  int saturated = 0;  // smallest m with margin[m] >= rate; always <= cutoff
};

// Requires 0 < rate <= ||v||_1 and v != 0; rejects rate > ||v||_1.
SupportThresholds support_thresholds(std::span<const double> v, double rate);

// Shape of the minimizer of rate*||x||_inf - (x, v) over the unit p-sphere:
//  - graded: 1 < p < inf; unique solution with fractional magnitudes.
//  - corner: p = 1; extreme points have 0/1 magnitudes, positions strictly
//    between the saturated block and the cutoff are free and are fixed by
//    independent coin flips.
//  - sign_locked: rate == ||v||_1 or p = inf; any sign-pattern vector of v
//    minimizes (zero entries resolved to +1).
enum class InnerCase { graded, corner, sign_locked };

struct InnerSolution {
  std::vector<double> x;  // minimizer, ||x||_p = 1
  InnerCase kind = InnerCase::sign_locked;
  int cutoff = 0;     // unused (0) for sign_locked
  int saturated = 0;  // unused (0) for sign_locked
  // Certified support bound: (x, v) / ||x||_inf >= sum of the top `support`
  // magnitudes of v. Equals saturated (corner), cutoff (graded), n (sign_locked).
  int support = 0;
  double min_value = 0.0;  // attained objective value; <= 0, and < 0 iff rate < ||v||_1
  std::vector<int> free_indices;  // original indices left free (corner only)
};

// Exact minimizer of rate*||x||_inf - (x, v) over {||x||_p = 1}.
// Requires 0 < rate <= ||v||_1 (exact comparison; callers operating near the
// terminal identity rate == ||v||_1 must clamp before calling) and v != 0.
InnerSolution solve_inner(double rate, std::span<const double> v, NormP p, Rng& rng);

// Minimum value alone; deterministic (free choices do not affect the value).
double inner_min_value(double rate, std::span<const double> v, NormP p);

}  // namespace accut

#endif
