#include "accut/inner_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace accut {

namespace {

double sign_pm(double t) { return t >= 0.0 ? 1.0 : -1.0; }

double norm1(std::span<const double> v) {
  double s = 0.0;
  for (double t : v) s += std::fabs(t);
  return s;
}

struct SortedMagnitudes {
  std::vector<int> index;   // index[pos] = original index, magnitudes descending,
                            // ties by original index
  std::vector<double> mag;  // mag[pos], descending
  std::vector<double> cum;  // cum[m] = sum of top m magnitudes, cum[0] = 0
};

SortedMagnitudes sort_magnitudes(std::span<const double> v) {
  const int n = static_cast<int>(v.size());
  SortedMagnitudes s;
  s.index.resize(n);
  std::iota(s.index.begin(), s.index.end(), 0);
  std::stable_sort(s.index.begin(), s.index.end(),
                   [&](int a, int b) { return std::fabs(v[a]) > std::fabs(v[b]); });
  s.mag.resize(n);
  s.cum.assign(n + 1, 0.0);
  for (int pos = 0; pos < n; ++pos) {
    s.mag[pos] = std::fabs(v[s.index[pos]]);
    s.cum[pos + 1] = s.cum[pos] + s.mag[pos];
  }
  return s;
}

void validate(double rate, std::span<const double> v, double n1) {
  if (v.empty()) throw std::invalid_argument("inner subproblem requires a nonempty direction");
  if (n1 <= 0.0) throw std::invalid_argument("inner subproblem requires a nonzero direction");
  if (!(rate > 0.0)) throw std::invalid_argument("inner subproblem requires rate > 0");
  if (rate > n1) {
    throw std::invalid_argument("inner subproblem requires rate <= ||v||_1; clamp before calling");
  }
}

SupportThresholds thresholds_from(const SortedMagnitudes& s, double rate) {
  const int n = static_cast<int>(s.mag.size());
  SupportThresholds t;
  t.margin.assign(n + 1, 0.0);
  t.cutoff = n + 1;
  t.saturated = n + 1;
  for (int m = 1; m <= n; ++m) {
    const double next = (m < n) ? s.mag[m] : 0.0;
    t.margin[m] = s.cum[m] - static_cast<double>(m) * next;
    if (t.saturated > n && t.margin[m] >= rate) t.saturated = m;
    if (t.cutoff > n && t.margin[m] > rate) t.cutoff = m;
  }
  return t;
}

InnerSolution sign_locked_solution(double rate, std::span<const double> v, NormP p) {
  const int n = static_cast<int>(v.size());
  InnerSolution sol;
  sol.kind = InnerCase::sign_locked;
  sol.support = n;
  double scale = 1.0;
  if (p == NormP::one) scale = 1.0 / static_cast<double>(n);
  if (p == NormP::two) scale = 1.0 / std::sqrt(static_cast<double>(n));
  sol.x.resize(n);
  double inner = 0.0;
  for (int i = 0; i < n; ++i) {
    sol.x[i] = sign_pm(v[i]) * scale;
    inner += sol.x[i] * v[i];
  }
  sol.min_value = rate * scale - inner;
  return sol;
}

}  // namespace

double norm_p(std::span<const double> v, NormP p) {
  switch (p) {
    case NormP::one:
      return norm1(v);
    case NormP::two: {
      double s = 0.0;
      for (double t : v) s += t * t;
      return std::sqrt(s);
    }
    case NormP::inf: {
      double s = 0.0;
      for (double t : v) s = std::max(s, std::fabs(t));
      return s;
    }
  }
  return 0.0;
}

SupportThresholds support_thresholds(std::span<const double> v, double rate) {
  const double n1 = norm1(v);
  validate(rate, v, n1);
  return thresholds_from(sort_magnitudes(v), rate);
}

InnerSolution solve_inner(double rate, std::span<const double> v, NormP p, Rng& rng) {
  const int n = static_cast<int>(v.size());
  const double n1 = norm1(v);
  validate(rate, v, n1);

  if (p == NormP::inf || rate == n1) {
    return sign_locked_solution(rate, v, p);
  }

  const SortedMagnitudes s = sort_magnitudes(v);
  const SupportThresholds t = thresholds_from(s, rate);

  InnerSolution sol;
  sol.cutoff = t.cutoff;
  sol.saturated = t.saturated;
  sol.x.assign(n, 0.0);

  if (p == NormP::one) {
    sol.kind = InnerCase::corner;
    sol.support = t.saturated;
    // Ones on the saturated block, zeros from the cutoff on; strictly between
    // the two, any 0/1 choice attains the same value. The saturated rule wins
    // when the blocks meet.
    std::vector<double> z(n, 0.0);
    int ones = 0;
    for (int pos = 0; pos < n; ++pos) {
      const int m = pos + 1;
      if (m <= t.saturated) {
        z[pos] = 1.0;
      } else if (m >= t.cutoff) {
        z[pos] = 0.0;
      } else {
        sol.free_indices.push_back(s.index[pos]);
        z[pos] = static_cast<double>(rng.coin());
      }
      if (z[pos] == 1.0) ++ones;
    }
    for (int pos = 0; pos < n; ++pos) {
      if (z[pos] != 0.0) {
        const int i = s.index[pos];
        sol.x[i] = sign_pm(v[i]) / static_cast<double>(ones);
      }
    }
    sol.min_value = (rate - s.cum[t.saturated]) / static_cast<double>(t.saturated);
    return sol;
  }

  // Graded case (p = 2): magnitudes saturate at 1 on the top cutoff block and
  // decay proportionally to |v_i| past it.
  sol.kind = InnerCase::graded;
  sol.support = t.cutoff;
  const double denom = s.cum[t.cutoff] - rate;  // > cutoff * mag[cutoff+1] >= 0
  std::vector<double> z(n, 0.0);
  double z_norm_sq = 0.0;
  double gain = 0.0;  // sum z_i |v_i|
  for (int pos = 0; pos < n; ++pos) {
    z[pos] = std::min(1.0, static_cast<double>(t.cutoff) * s.mag[pos] / denom);
    z_norm_sq += z[pos] * z[pos];
    gain += z[pos] * s.mag[pos];
  }
  const double z_norm = std::sqrt(z_norm_sq);
  for (int pos = 0; pos < n; ++pos) {
    const int i = s.index[pos];
    sol.x[i] = sign_pm(v[i]) * z[pos] / z_norm;
  }
  sol.min_value = (rate - gain) / z_norm;
  return sol;
}

double inner_min_value(double rate, std::span<const double> v, NormP p) {
  const int n = static_cast<int>(v.size());
  const double n1 = norm1(v);
  validate(rate, v, n1);
  if (p == NormP::inf || rate == n1) {
    double scale = 1.0;
    if (p == NormP::one) scale = 1.0 / static_cast<double>(n);
    if (p == NormP::two) scale = 1.0 / std::sqrt(static_cast<double>(n));
    return (rate - n1) * scale;
  }
  const SortedMagnitudes s = sort_magnitudes(v);
  const SupportThresholds t = thresholds_from(s, rate);
  if (p == NormP::one) {
    return (rate - s.cum[t.saturated]) / static_cast<double>(t.saturated);
  }
  const double denom = s.cum[t.cutoff] - rate;
  double z_norm_sq = 0.0;
  double gain = 0.0;
  for (int pos = 0; pos < n; ++pos) {
    const double z = std::min(1.0, static_cast<double>(t.cutoff) * s.mag[pos] / denom);
    z_norm_sq += z * z;
    gain += z * s.mag[pos];
  }
  return (rate - gain) / std::sqrt(z_norm_sq);
}

}  // namespace accut
