#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reldp/decomp/tree_decomposition.hpp"

namespace reldp::engine {

/// Column holding the value of vertex (variable) v.
std::string vertex_column(int v);
/// Inverse of vertex_column; nullopt for auxiliary columns.
std::optional<int> parse_vertex_column(std::string_view name);

/// Scope bookkeeping for one TD node. "Kept" vertices are those whose columns
/// survive into the node's output table.
struct NodeContext {
  int index = 0;
  int id = 0;
  bool root = false;
  std::vector<int> bag;
  std::vector<int> kept;
  std::vector<std::vector<int>> child_kept;  // per child, in join order
  std::vector<int> introduced;               // bag vertices absent from every child table
  std::vector<int> available;                // bag plus every child column
  std::vector<int> removed;                  // available minus kept
};

/// With `full_bags` every table keeps its whole bag; otherwise only the part
/// shared with the parent bag (nothing at the root).
std::vector<NodeContext> make_contexts(const TreeDecomposition& td, bool full_bags);

}  // namespace reldp::engine
