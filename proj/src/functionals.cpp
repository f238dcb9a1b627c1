#include "accut/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace accut {

namespace {

void require_edges(const Graph& g) {
  if (g.volume() <= 0.0) {
    throw std::invalid_argument("objective undefined on a graph with zero volume");
  }
}

}  // namespace

double total_variation(const Graph& g, const StateVector& x) {
  double sum = 0.0;
  for (const WeightedEdge& e : g.edges()) {
    sum += e.w * std::fabs(x[e.u] - x[e.v]);
  }
  return sum;
}

MedianInfo weighted_median(const Graph& g, const StateVector& x, MedianEndpoint endpoint) {
  const int n = x.size();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });

  // Group into distinct values with their masses.
  std::vector<double> value;
  std::vector<double> mass;
  for (int idx : order) {
    if (value.empty() || x[idx] != value.back()) {
      value.push_back(x[idx]);
      mass.push_back(0.0);
    }
    mass.back() += g.degree(idx);
  }

  const double total = g.volume();
  MedianInfo info;
  if (total <= 0.0) {
    info.alpha_lo = value.front();
    info.alpha_hi = value.back();
  } else {
    const double half = total / 2.0;
    // value[k] minimizes iff mass strictly below and strictly above are both
    // at most half the volume.
    double below = 0.0;
    bool found = false;
    for (std::size_t k = 0; k < value.size(); ++k) {
      const double above = total - below - mass[k];
      if (below <= half && above <= half) {
        if (!found) info.alpha_lo = value[k];
        info.alpha_hi = value[k];
        found = true;
      }
      below += mass[k];
    }
  }

  info.alpha = (endpoint == MedianEndpoint::low) ? info.alpha_lo : info.alpha_hi;
  double below = 0.0;
  double above = 0.0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == info.alpha) {
      info.level_set.push_back(i);
      info.mass_at += g.degree(i);
    } else if (x[i] < info.alpha) {
      below += g.degree(i);
    } else {
      above += g.degree(i);
    }
  }
  info.below_minus_above = below - above;
  return info;
}

double median_deviation(const Graph& g, const StateVector& x) {
  const MedianInfo info = weighted_median(g, x);
  double sum = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    sum += g.degree(i) * std::fabs(x[i] - info.alpha);
  }
  return sum;
}

double anti_objective(const Graph& g, const StateVector& x) {
  require_edges(g);
  const double denom = 2.0 * g.volume() * x.norm_inf() - median_deviation(g, x);
  return total_variation(g, x) / denom;
}

double maxcut_objective(const Graph& g, const StateVector& x) {
  require_edges(g);
  return total_variation(g, x) / (g.volume() * x.norm_inf());
}

double surrogate_objective(const Graph& g, const StateVector& x, double rate) {
  require_edges(g);
  return (total_variation(g, x) + rate * median_deviation(g, x)) / (2.0 * g.volume());
}

namespace {

RoundedCut best_threshold(const Graph& g, const StateVector& x, bool anti) {
  const int n = x.size();
  std::vector<double> thresholds(x.values());
  std::sort(thresholds.begin(), thresholds.end(), std::greater<double>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  auto level_set = [&](double theta) {
    VertexSet s(n);
    for (int i = 0; i < n; ++i) {
      if (x[i] > theta) s.insert(i);
    }
    return s;
  };
  auto score = [&](const VertexSet& s) {
    const CutObjectives obj = discrete_objectives(g, s);
    return anti ? obj.anti : obj.maxcut;
  };

  // Seed with the rounding at zero so the result is never worse than the
  // sign-based cut; replace only on strict improvement.
  RoundedCut best{level_set(0.0), 0.0};
  best.ratio = score(best.set);
  for (double theta : thresholds) {
    VertexSet s = level_set(theta);
    const double value = score(s);
    if (value > best.ratio) {
      best.set = std::move(s);
      best.ratio = value;
    }
  }
  VertexSet all = level_set(thresholds.back() - 1.0);
  const double value = score(all);
  if (value > best.ratio) {
    best.set = std::move(all);
    best.ratio = value;
  }
  return best;
}

}  // namespace

RoundedCut threshold_round(const Graph& g, const StateVector& x) {
  return best_threshold(g, x, true);
}

RoundedCut threshold_round_maxcut(const Graph& g, const StateVector& x) {
  return best_threshold(g, x, false);
}

}  // namespace accut
