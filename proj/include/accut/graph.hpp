#ifndef ACCUT_GRAPH_HPP
#define ACCUT_GRAPH_HPP

#include <span>
#include <vector>

namespace accut {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};

// Subset of the vertices of a graph, stored as a membership mask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : in_(n, 0) {}

  static VertexSet from_indices(int n, std::span<const int> indices);

  int universe_size() const { return static_cast<int>(in_.size()); }
  bool contains(int i) const { return in_[i] != 0; }
  void insert(int i) { in_[i] = 1; }
  void erase(int i) { in_[i] = 0; }
  int count() const;
  VertexSet complement() const;
  std::vector<int> indices() const;  // ascending order

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<unsigned char> in_;
};

// Weighted undirected graph with nonnegative edge weights. Immutable after
// construction; solver runs share one instance by const reference.
class Graph {
 public:
  struct Neighbor {
    int to;
    double w;
  };

  // Validates and indexes the edge list. Throws std::invalid_argument on an
  // out-of-range endpoint, a self-loop, a negative weight, or a duplicate
  // edge in either orientation.
  Graph(int n, std::vector<WeightedEdge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  std::span<const Neighbor> neighbors(int i) const {
    return {adj_.data() + offset_[i], adj_.data() + offset_[i + 1]};
  }

  double degree(int i) const { return degree_[i]; }
  const std::vector<double>& degrees() const { return degree_; }

  // Sum of all weighted degrees; equals twice the total edge weight.
  double volume() const { return volume_; }
  double total_weight() const { return total_weight_; }
  double volume_of(const VertexSet& s) const;

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
  std::vector<int> offset_;
  std::vector<Neighbor> adj_;
  std::vector<double> degree_;
  double volume_ = 0.0;
  double total_weight_ = 0.0;
};

// Total weight of edges with exactly one endpoint in s.
double cut_value(const Graph& g, const VertexSet& s);

struct CutObjectives {
  double anti = 0.0;  // cut(S) / max{vol(S), vol(S^c)}
  double maxcut = 0.0;  // cut(S) / (vol(V) / 2)
};

// Both discrete quotients for one subset. S empty or S = V yields zeros.
CutObjectives discrete_objectives(const Graph& g, const VertexSet& s);

}  // namespace accut

#endif
