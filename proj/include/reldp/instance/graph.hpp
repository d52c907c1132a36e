#pragma once

#include <set>
#include <utility>
#include <vector>

namespace reldp {

/// Undirected simple graph on vertices 1..n.
class Graph {
 public:
  using Edge = std::pair<int, int>;  // first < second

  Graph() = default;
  explicit Graph(int num_vertices);
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  Graph(int num_vertices, const std::vector<Edge>& edges);

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::set<Edge>& edges() const noexcept { return edges_; }

  /// Returns false when the edge was already present.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  /// Index 0 is unused; neighbour lists are sorted.
  std::vector<std::vector<int>> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::set<Edge> edges_;
};

}  // namespace reldp
