#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reldp/instance/dimacs.hpp"
#include "reldp/instance/graph.hpp"

namespace reldp {

struct TdNode {
  int id = 0;
  std::vector<int> bag;       // sorted, no repetitions
  std::vector<int> children;  // node indices, in join order
  int parent = -1;            // node index; -1 at the root

  friend bool operator==(const TdNode&, const TdNode&) = default;
};

/// Rooted tree decomposition over vertices 1..num_vertices. Nodes are
/// addressed by index; `id` is the external name used in files and traces.
/// All producers in this library keep the root at the largest id.
class TreeDecomposition {
 public:
  /// A single node with an empty bag.
  TreeDecomposition();
  /// Checks tree shape (one root, consistent parent/child links, every node
  /// reachable, unique positive ids) and bag ranges; sorts bags. Throws
  /// ValidationError.
  TreeDecomposition(int num_vertices, std::vector<TdNode> nodes, int root);

  int num_vertices() const noexcept { return num_vertices_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<TdNode>& nodes() const noexcept { return nodes_; }
  const TdNode& node(int index) const { return nodes_.at(static_cast<std::size_t>(index)); }
  int root() const noexcept { return root_; }

  /// max |bag| - 1; -1 when every bag is empty.
  int width() const;
  int max_id() const;
  /// Throws std::out_of_range for unknown ids.
  int index_of(int id) const;

  /// Children before parents, children in list order.
  std::vector<int> post_order() const;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;

 private:
  int num_vertices_ = 0;
  std::vector<TdNode> nodes_;
  int root_ = 0;
};

/// Rebuilds the tree in post-order so that node index i has id i + 1.
TreeDecomposition renumber_post_order(const TreeDecomposition& td);

/// Per-node view of what enters and leaves the scope.
struct NodeDelta {
  std::vector<int> introduced;                     // bag minus all child bags
  std::vector<std::vector<int>> removed_per_child;  // child bag minus bag
  std::vector<int> shared;                         // bag intersected with parent bag
};

NodeDelta node_delta(const TreeDecomposition& td, int index);

enum class NodeType { leaf, join, intr, rem, other };

/// Classification under the nice-TD rules; `other` for anything else.
NodeType node_type(const TreeDecomposition& td, int index);
bool is_nice(const TreeDecomposition& td);
const char* to_string(NodeType t);

struct Violation {
  enum class Kind { unknown_vertex, vertex_coverage, edge_coverage, connectedness };
  Kind kind;
  int vertex = 0;         // witness vertex (first endpoint for edges)
  int other_vertex = 0;   // second endpoint for edge_coverage
  int node = -1;          // witness node index, when meaningful
  std::string message;
};

/// First violated property, checked in the order unknown_vertex,
/// vertex_coverage, edge_coverage, connectedness; nullopt when valid.
std::optional<Violation> validate(const TreeDecomposition& td, const Graph& g);

/// Min-fill elimination with seeded tie-breaking, then bags that are subsets
/// of a neighbouring bag are contracted. Rooted at a centroid node and
/// numbered in post-order.
TreeDecomposition decompose(const Graph& g, std::uint64_t seed);

/// Splits fan-outs above k by chaining copies of the parent bag. Requires k >= 2.
TreeDecomposition limit_children(const TreeDecomposition& td, int k);

/// Adds an empty-bag root above a non-empty root.
TreeDecomposition normalize_root(const TreeDecomposition& td);

/// Equivalent nice decomposition with empty leaves and an empty root.
TreeDecomposition make_nice(const TreeDecomposition& td);

/// PACE `td` format. The node with the largest id becomes the root and child
/// lists are ordered by id.
TreeDecomposition read_td(std::string_view text, Warnings* warnings = nullptr);
std::string write_td(const TreeDecomposition& td);

}  // namespace reldp
