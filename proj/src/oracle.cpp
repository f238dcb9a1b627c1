#include "accut/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "accut/functionals.hpp"

namespace accut {

namespace {

VertexSet set_from_mask(const std::vector<unsigned char>& in) {
  VertexSet s(static_cast<int>(in.size()));
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i]) s.insert(static_cast<int>(i));
  }
  return s;
}

double unit_norm(std::vector<double>& y, NormP p) {
  const double scale = norm_p(y, p);
  for (double& c : y) c /= scale;
  return scale;
}

// Gaussian direction; never the zero vector.
std::vector<double> random_direction(int n, Rng& rng) {
  std::vector<double> y(n);
  while (true) {
    double mass = 0.0;
    for (double& c : y) {
      c = rng.next_gaussian();
      mass += std::abs(c);
    }
    if (mass > 0.0) return y;
  }
}

}  // namespace

OracleResult exhaustive_best(const Graph& g, Objective objective) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("exhaustive search needs at least one vertex");
  if (n > 24) throw std::invalid_argument("exhaustive search is capped at 24 vertices");
  const double vol = g.volume();
  if (vol <= 0.0) throw std::invalid_argument("discrete objectives need a positive volume");

  // Vertex 0 stays on one side; complements give the same value.
  std::vector<unsigned char> in(n, 0);
  in[0] = 1;
  double vol_s = g.degree(0);
  double cut = g.degree(0);  // every neighbor of 0 starts outside

  auto ratio = [&](double c, double vs) {
    if (objective == Objective::maxcut) return c / (vol / 2.0);
    const double denom = std::max(vs, vol - vs);
    return denom > 0.0 ? c / denom : 0.0;
  };

  OracleResult out;
  out.best_value = ratio(cut, vol_s);
  out.best_set = set_from_mask(in);
  out.evaluated = 1;

  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t code = 1; code < total; ++code) {
    const int v = std::countr_zero(code) + 1;  // Gray code flips one vertex
    double to_inside = 0.0;
    for (const Graph::Neighbor& nb : g.neighbors(v)) {
      if (in[nb.to]) to_inside += nb.w;
    }
    if (in[v]) {
      in[v] = 0;
      vol_s -= g.degree(v);
      cut += 2.0 * to_inside - g.degree(v);
    } else {
      in[v] = 1;
      vol_s += g.degree(v);
      cut += g.degree(v) - 2.0 * to_inside;
    }
    out.evaluated += 1;
    const double value = ratio(cut, vol_s);
    if (value > out.best_value) {
      out.best_value = value;
      out.best_set = set_from_mask(in);
    }
  }
  return out;
}

bool verify_inner(double rate, std::span<const double> v, NormP p, const InnerSolution& sol,
                  int samples, Rng& rng) {
  constexpr double kTol = 1e-9;
  const int n = static_cast<int>(v.size());
  if (static_cast<int>(sol.x.size()) != n) return false;

  if (std::abs(norm_p(sol.x, p) - 1.0) > kTol) return false;

  auto objective = [&](std::span<const double> y) {
    double peak = 0.0;
    double inner = 0.0;
    for (int i = 0; i < n; ++i) {
      peak = std::max(peak, std::abs(y[i]));
      inner += y[i] * v[i];
    }
    return rate * peak - inner;
  };

  if (std::abs(objective(sol.x) - sol.min_value) > kTol) return false;

  for (int t = 0; t < samples; ++t) {
    std::vector<double> y = random_direction(n, rng);
    unit_norm(y, p);
    if (objective(y) < sol.min_value - kTol) return false;
  }
  return true;
}

bool verify_membership(const Graph& g, const StateVector& x, const SubgradientBundle& bundle,
                       int samples, Rng& rng) {
  const int n = g.vertex_count();
  const double tol = 1e-9 * std::max(1.0, g.volume());
  const auto& u = bundle.cut_grad;
  const auto& v = bundle.balance_grad;
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n) return false;

  auto dot = [n](const std::vector<double>& a, const StateVector& b) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
  };
  auto dot_raw = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
  };

  // Tightness at x: a subgradient of a positively homogeneous convex function
  // pairs with x to the function value itself.
  if (std::abs(dot(u, x) - total_variation(g, x)) > tol) return false;

  if (bundle.objective == Objective::anti) {
    if (std::abs(dot(v, x) - median_deviation(g, x)) > tol) return false;
    double v_sum = 0.0;
    for (const double c : v) v_sum += c;
    if (std::abs(v_sum) > tol) return false;
  } else {
    for (const double c : v) {
      if (c != 0.0) return false;
    }
  }

  for (int t = 0; t < samples; ++t) {
    const std::vector<double> raw = random_direction(n, rng);
    const StateVector y(raw);
    if (total_variation(g, y) < dot_raw(u, raw) - tol) return false;
    if (bundle.objective == Objective::anti) {
      if (median_deviation(g, y) < dot_raw(v, raw) - tol) return false;
    }
  }
  return true;
}

}  // namespace accut
