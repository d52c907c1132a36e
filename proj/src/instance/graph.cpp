#include "reldp/instance/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace reldp {

Graph::Graph(int num_vertices) : n_(num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int num_vertices, const std::vector<Edge>& edges) : Graph(num_vertices) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

bool Graph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_)
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range 1.." +
                                std::to_string(n_));
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  return edges_.emplace(u, v).second;
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return edges_.count({u, v}) != 0;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_) + 1);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace reldp
