#include "accut/subgradient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace accut {

namespace {

int sign_pm(double t) { return t >= 0.0 ? 1 : -1; }

void require_edges(const Graph& g) {
  if (g.volume() <= 0.0) {
    throw std::invalid_argument("subgradient selection needs a graph with positive volume");
  }
}

struct EdgeStats {
  std::vector<double> lower_minus_upper;
  std::vector<double> tie_weight;
};

EdgeStats edge_stats(const Graph& g, const StateVector& x) {
  const int n = g.vertex_count();
  EdgeStats st;
  st.lower_minus_upper.assign(n, 0.0);
  st.tie_weight.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double lower = 0.0, upper = 0.0, tie = 0.0;
    for (const Graph::Neighbor& nb : g.neighbors(i)) {
      if (x[nb.to] < x[i]) {
        lower += nb.w;
      } else if (x[nb.to] > x[i]) {
        upper += nb.w;
      } else {
        tie += nb.w;
      }
    }
    st.lower_minus_upper[i] = lower - upper;
    st.tie_weight[i] = tie;
  }
  return st;
}

// Median subgradient with the level-set slack spread uniformly: d_i * sign
// off the level set, (A/B) d_i on it. Sums to zero by construction.
std::vector<double> spread_balance(const Graph& g, const StateVector& x, const MedianInfo& mi) {
  const int n = g.vertex_count();
  std::vector<double> v(n, 0.0);
  const double ratio = mi.mass_at > 0.0 ? mi.below_minus_above / mi.mass_at : 0.0;
  for (int i = 0; i < n; ++i) {
    if (x[i] > mi.alpha) {
      v[i] = g.degree(i);
    } else if (x[i] < mi.alpha) {
      v[i] = -g.degree(i);
    } else {
      v[i] = ratio * g.degree(i);
    }
  }
  return v;
}

std::vector<double> combine(const std::vector<double>& u, const std::vector<double>& v,
                            double rate, double denom) {
  std::vector<double> s(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    s[i] = (u[i] + rate * v[i]) / denom;
  }
  return s;
}

}  // namespace

BoundaryIndicator maxcut_indicator(const Graph& g, const StateVector& x) {
  EdgeStats st = edge_stats(g, x);
  const int n = g.vertex_count();
  BoundaryIndicator bi;
  bi.value.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double p = st.lower_minus_upper[i];
    const double q = st.tie_weight[i];
    switch (x.side(i)) {
      case 1:
        bi.value[i] = p - q;
        break;
      case -1:
        bi.value[i] = p + q;
        break;
      default:
        bi.value[i] = p + sign_pm(p) * q;
        break;
    }
  }
  bi.lower_minus_upper = std::move(st.lower_minus_upper);
  bi.tie_weight = std::move(st.tie_weight);
  return bi;
}

VertexOrder order_by_value_then_key(const StateVector& x, std::span<const double> key,
                                    Rng& rng) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(key.size()) != n) {
    throw std::invalid_argument("order key length must match the state vector");
  }
  std::vector<std::uint64_t> salt(n);
  for (int i = 0; i < n; ++i) salt[i] = rng.next_u64();
  VertexOrder vo;
  vo.order.resize(n);
  for (int i = 0; i < n; ++i) vo.order[i] = i;
  std::sort(vo.order.begin(), vo.order.end(), [&](int a, int b) {
    return std::make_tuple(x[a], key[a], salt[a]) < std::make_tuple(x[b], key[b], salt[b]);
  });
  vo.rank.resize(n);
  for (int pos = 0; pos < n; ++pos) vo.rank[vo.order[pos]] = pos;
  return vo;
}

std::vector<double> select_u(const Graph& g, const VertexOrder& order) {
  const int n = static_cast<int>(order.rank.size());
  std::vector<double> u(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (const Graph::Neighbor& nb : g.neighbors(i)) {
      acc += order.rank[i] > order.rank[nb.to] ? nb.w : -nb.w;
    }
    u[i] = acc;
  }
  return u;
}

SubgradientBundle select_cia0(const Graph& g, const StateVector& x, double rate, Rng& rng) {
  require_edges(g);
  MedianInfo mi = weighted_median(g, x);
  BoundaryIndicator bi = maxcut_indicator(g, x);
  VertexOrder vo = order_by_value_then_key(x, bi.value, rng);

  SubgradientBundle b;
  b.objective = Objective::anti;
  b.rate = rate;
  b.alpha_used = mi.alpha;
  b.cut_grad = select_u(g, vo);
  b.balance_grad = spread_balance(g, x, mi);
  b.combined = combine(b.cut_grad, b.balance_grad, rate, 2.0 * g.volume());
  return b;
}

SubgradientBundle select_cia1(const Graph& g, const StateVector& x, double rate, Rng& rng) {
  require_edges(g);
  const int n = g.vertex_count();
  MedianInfo mi = weighted_median(g, x);
  EdgeStats st = edge_stats(g, x);
  const double alpha = mi.alpha;
  const int level_size = static_cast<int>(mi.level_set.size());

  // Balance direction folded into the tie indicator. Off the level set the
  // median subdifferential pins a_i = +/- d_i; on it each coordinate may move
  // inside [max(A-B+d_i, -d_i), min(A+B-d_i, d_i)] while the rest absorb the
  // slack, and the endpoint is chosen to coincide with the vertex's eventual
  // side of the order (peak vertices take the end that resists leaving the
  // peak, interior ones the end with the larger combined indicator).
  std::vector<double> a(n, 0.0);
  const double A = mi.below_minus_above;
  const double B = mi.mass_at;
  for (int i = 0; i < n; ++i) {
    if (x[i] > alpha) {
      a[i] = g.degree(i);
    } else if (x[i] < alpha) {
      a[i] = -g.degree(i);
    } else if (level_size <= 1) {
      a[i] = B > 0.0 ? (A / B) * g.degree(i) : 0.0;
    } else {
      const double d = g.degree(i);
      const double lo = std::max(A - B + d, -d);
      const double hi = std::min(A + B - d, d);
      switch (x.side(i)) {
        case 1:
          a[i] = lo;
          break;
        case -1:
          a[i] = hi;
          break;
        default: {
          const double p = st.lower_minus_upper[i];
          a[i] = std::abs(p + rate * lo) > std::abs(p + rate * hi) ? lo : hi;
          break;
        }
      }
    }
  }

  std::vector<double> indicator(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double p = st.lower_minus_upper[i];
    const double q = st.tie_weight[i];
    const double t = p + rate * a[i];
    switch (x.side(i)) {
      case 1:
        indicator[i] = p - q + rate * a[i];
        break;
      case -1:
        indicator[i] = p + q + rate * a[i];
        break;
      default:
        indicator[i] = t + sign_pm(t) * q;
        break;
    }
  }

  VertexOrder vo = order_by_value_then_key(x, indicator, rng);

  SubgradientBundle b;
  b.objective = Objective::anti;
  b.rate = rate;
  b.alpha_used = alpha;
  b.cut_grad = select_u(g, vo);

  if (level_size <= 1) {
    b.balance_grad = std::move(a);
  } else {
    // The level-set block is contiguous in the order (primary sort is x).
    int first_pos = -1, last_pos = -1;
    for (int pos = 0; pos < n; ++pos) {
      if (x[vo.order[pos]] == alpha) {
        if (first_pos < 0) first_pos = pos;
        last_pos = pos;
      }
    }
    // All level-set vertices share one side class; pick the pivot that the
    // local-optimality argument needs for that class.
    int pivot;
    switch (x.side(mi.level_set.front())) {
      case 1:
        pivot = vo.order[first_pos];
        break;
      case -1:
        pivot = vo.order[last_pos];
        break;
      default: {
        const int cf = vo.order[first_pos];
        const int cl = vo.order[last_pos];
        pivot = std::abs(indicator[cf]) >= std::abs(indicator[cl]) ? cf : cl;
        break;
      }
    }
    const double denom = B - g.degree(pivot);
    const double ratio = denom > 0.0 ? (A - a[pivot]) / denom : 0.0;
    std::vector<double> v(n, 0.0);
    for (int i = 0; i < n; ++i) {
      if (x[i] != alpha) {
        v[i] = a[i];
      } else if (i == pivot) {
        v[i] = a[i];
      } else {
        v[i] = ratio * g.degree(i);
      }
    }
    b.balance_grad = std::move(v);
  }

  b.combined = combine(b.cut_grad, b.balance_grad, rate, 2.0 * g.volume());
  return b;
}

SubgradientBundle select_maxcut(const Graph& g, const StateVector& x, Rng& rng) {
  require_edges(g);
  BoundaryIndicator bi = maxcut_indicator(g, x);
  VertexOrder vo = order_by_value_then_key(x, bi.value, rng);

  SubgradientBundle b;
  b.objective = Objective::maxcut;
  b.rate = 0.0;
  b.alpha_used = 0.0;
  b.cut_grad = select_u(g, vo);
  b.balance_grad.assign(g.vertex_count(), 0.0);
  b.combined = combine(b.cut_grad, b.balance_grad, 0.0, g.volume());
  return b;
}

}  // namespace accut
