#include "accut/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace accut {

VertexSet VertexSet::from_indices(int n, std::span<const int> indices) {
  VertexSet s(n);
  for (int i : indices) {
    if (i < 0 || i >= n) {
      throw std::invalid_argument("vertex index " + std::to_string(i) + " outside [0, " +
                                  std::to_string(n) + ")");
    }
    s.insert(i);
  }
  return s;
}

int VertexSet::count() const {
  int c = 0;
  for (unsigned char b : in_) c += b;
  return c;
}

VertexSet VertexSet::complement() const {
  VertexSet s(universe_size());
  for (int i = 0; i < universe_size(); ++i) s.in_[i] = in_[i] ? 0 : 1;
  return s;
}

std::vector<int> VertexSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < universe_size(); ++i) {
    if (in_[i]) out.push_back(i);
  }
  return out;
}

Graph::Graph(int n, std::vector<WeightedEdge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (const WeightedEdge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw std::invalid_argument("edge endpoint (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") outside [0, " + std::to_string(n_) +
                                  ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.w < 0.0) {
      throw std::invalid_argument("negative weight on edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + "); only nonnegative weights are in scope");
    }
  }

  std::vector<std::pair<int, int>> keys;
  keys.reserve(edges_.size());
  for (const WeightedEdge& e : edges_) {
    keys.push_back(std::minmax(e.u, e.v));
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 1; i < keys.size(); ++i) {
    if (keys[i] == keys[i - 1]) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(keys[i].first) + ", " +
                                  std::to_string(keys[i].second) +
                                  "); parallel edges must be merged by the caller");
    }
  }

  degree_.assign(n_, 0.0);
  std::vector<int> fill(n_, 0);
  for (const WeightedEdge& e : edges_) {
    degree_[e.u] += e.w;
    degree_[e.v] += e.w;
    ++fill[e.u];
    ++fill[e.v];
    total_weight_ += e.w;
  }
  for (double d : degree_) volume_ += d;

  offset_.assign(n_ + 1, 0);
  for (int i = 0; i < n_; ++i) offset_[i + 1] = offset_[i] + fill[i];
  adj_.resize(edges_.size() * 2);
  std::vector<int> cursor(offset_.begin(), offset_.end() - 1);
  for (const WeightedEdge& e : edges_) {
    adj_[cursor[e.u]++] = {e.v, e.w};
    adj_[cursor[e.v]++] = {e.u, e.w};
  }
}

double Graph::volume_of(const VertexSet& s) const {
  double v = 0.0;
  for (int i = 0; i < n_; ++i) {
    if (s.contains(i)) v += degree_[i];
  }
  return v;
}

double cut_value(const Graph& g, const VertexSet& s) {
  double c = 0.0;
  for (const WeightedEdge& e : g.edges()) {
    if (s.contains(e.u) != s.contains(e.v)) c += e.w;
  }
  return c;
}

CutObjectives discrete_objectives(const Graph& g, const VertexSet& s) {
  const double vol = g.volume();
  if (vol <= 0.0) return {};
  const double vol_s = g.volume_of(s);
  const double cut = cut_value(g, s);
  CutObjectives out;
  out.anti = cut / std::max(vol_s, vol - vol_s);
  out.maxcut = cut / (vol / 2.0);
  return out;
}

}  // namespace accut
