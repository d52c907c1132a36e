#include "reldp/decomp/tree_decomposition.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "reldp/error.hpp"

namespace reldp {

TreeDecomposition::TreeDecomposition() : nodes_{TdNode{1, {}, {}, -1}} {}

TreeDecomposition::TreeDecomposition(int num_vertices, std::vector<TdNode> nodes, int root)
    : num_vertices_(num_vertices), nodes_(std::move(nodes)), root_(root) {
  const int n = static_cast<int>(nodes_.size());
  if (num_vertices < 0) throw ValidationError("negative vertex count");
  if (n == 0) throw ValidationError("tree decomposition without nodes");
  if (root < 0 || root >= n) throw ValidationError("root index out of range");
  if (nodes_[root].parent != -1) throw ValidationError("root has a parent");

  std::set<int> ids;
  for (int i = 0; i < n; ++i) {
    auto& node = nodes_[i];
    if (node.id <= 0 || !ids.insert(node.id).second)
      throw ValidationError("node id " + std::to_string(node.id) + " is not a unique positive integer");
    std::sort(node.bag.begin(), node.bag.end());
    node.bag.erase(std::unique(node.bag.begin(), node.bag.end()), node.bag.end());
    for (int v : node.bag)
      if (v < 1 || v > num_vertices)
        throw ValidationError("node " + std::to_string(node.id) + " holds vertex " + std::to_string(v) +
                              " outside 1.." + std::to_string(num_vertices));
    if (i != root && (node.parent < 0 || node.parent >= n))
      throw ValidationError("node " + std::to_string(node.id) + " has no valid parent");
    for (int c : node.children)
      if (c < 0 || c >= n || nodes_[c].parent != i)
        throw ValidationError("node " + std::to_string(node.id) + " lists an inconsistent child");
  }
  std::vector<int> child_count(n, 0);
  for (const auto& node : nodes_)
    for (int c : node.children) ++child_count[c];
  for (int i = 0; i < n; ++i)
    if (i != root && child_count[i] != 1)
      throw ValidationError("node " + std::to_string(nodes_[i].id) + " is not listed exactly once as a child");
  if (post_order().size() != nodes_.size()) throw ValidationError("tree is not connected");
}

int TreeDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& node : nodes_) best = std::max(best, node.bag.size());
  return static_cast<int>(best) - 1;
}

int TreeDecomposition::max_id() const {
  int best = 0;
  for (const auto& node : nodes_) best = std::max(best, node.id);
  return best;
}

int TreeDecomposition::index_of(int id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].id == id) return static_cast<int>(i);
  throw std::out_of_range("no node with id " + std::to_string(id));
}

std::vector<int> TreeDecomposition::post_order() const {
  std::vector<int> order;
  order.reserve(nodes_.size());
  std::vector<std::pair<int, std::size_t>> stack{{root_, 0}};
  std::vector<char> seen(nodes_.size(), 0);
  seen[root_] = 1;
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    const auto& children = nodes_[node].children;
    if (next < children.size()) {
      const int c = children[next++];
      if (seen[c]) return {};  // cycle
      seen[c] = 1;
      stack.emplace_back(c, 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  return order;
}

TreeDecomposition renumber_post_order(const TreeDecomposition& td) {
  const auto order = td.post_order();
  std::vector<int> new_index(td.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_index[order[i]] = static_cast<int>(i);
  std::vector<TdNode> nodes(td.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& old = td.node(order[i]);
    auto& node = nodes[i];
    node.id = static_cast<int>(i) + 1;
    node.bag = old.bag;
    node.parent = old.parent < 0 ? -1 : new_index[old.parent];
    for (int c : old.children) node.children.push_back(new_index[c]);
  }
  return TreeDecomposition(td.num_vertices(), std::move(nodes), new_index[td.root()]);
}

namespace {

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

NodeDelta node_delta(const TreeDecomposition& td, int index) {
  const auto& node = td.node(index);
  NodeDelta d;
  std::vector<int> below;
  for (int c : node.children) {
    const auto& cb = td.node(c).bag;
    d.removed_per_child.push_back(minus(cb, node.bag));
    std::vector<int> merged;
    std::set_union(below.begin(), below.end(), cb.begin(), cb.end(), std::back_inserter(merged));
    below = std::move(merged);
  }
  d.introduced = minus(node.bag, below);
  if (node.parent >= 0) d.shared = intersect(node.bag, td.node(node.parent).bag);
  return d;
}

NodeType node_type(const TreeDecomposition& td, int index) {
  const auto& node = td.node(index);
  const auto& bag = node.bag;
  if (node.children.empty()) return bag.empty() ? NodeType::leaf : NodeType::other;
  if (node.children.size() == 2) {
    const auto& a = td.node(node.children[0]).bag;
    const auto& b = td.node(node.children[1]).bag;
    return (a == bag && b == bag) ? NodeType::join : NodeType::other;
  }
  if (node.children.size() != 1) return NodeType::other;
  const auto& child = td.node(node.children[0]).bag;
  if (bag.size() == child.size() + 1 && std::includes(bag.begin(), bag.end(), child.begin(), child.end()))
    return NodeType::intr;
  if (child.size() == bag.size() + 1 && std::includes(child.begin(), child.end(), bag.begin(), bag.end()))
    return NodeType::rem;
  return NodeType::other;
}

bool is_nice(const TreeDecomposition& td) {
  for (std::size_t i = 0; i < td.size(); ++i)
    if (node_type(td, static_cast<int>(i)) == NodeType::other) return false;
  return true;
}

const char* to_string(NodeType t) {
  switch (t) {
    case NodeType::leaf: return "leaf";
    case NodeType::join: return "join";
    case NodeType::intr: return "intr";
    case NodeType::rem: return "rem";
    case NodeType::other: return "other";
  }
  return "?";
}

std::optional<Violation> validate(const TreeDecomposition& td, const Graph& g) {
  const int n = g.num_vertices();
  const int size = static_cast<int>(td.size());
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(std::max(n, td.num_vertices())) + 1);
  for (int i = 0; i < size; ++i)
    for (int v : td.node(i).bag) {
      if (v > n)
        return Violation{Violation::Kind::unknown_vertex, v, 0, i,
                         "node " + std::to_string(td.node(i).id) + " holds vertex " + std::to_string(v) +
                             " which is not in the graph"};
      holders[v].push_back(i);
    }
  for (int v = 1; v <= n; ++v)
    if (holders[v].empty())
      return Violation{Violation::Kind::vertex_coverage, v, 0, -1,
                       "vertex " + std::to_string(v) + " occurs in no bag"};
  for (const auto& [u, v] : g.edges()) {
    const auto common = intersect(holders[u], holders[v]);
    if (common.empty())
      return Violation{Violation::Kind::edge_coverage, u, v, -1,
                       "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is in no bag"};
  }
  for (int v = 1; v <= n; ++v) {
    const auto& hs = holders[v];
    // The nodes holding v are connected iff exactly one of them has its
    // parent outside the set.
    std::vector<char> holds(size, 0);
    for (int i : hs) holds[i] = 1;
    int tops = 0;
    int second_top = -1;
    for (int i : hs) {
      const int p = td.node(i).parent;
      if (p < 0 || !holds[p]) {
        if (++tops == 2) second_top = i;
      }
    }
    if (tops > 1)
      return Violation{Violation::Kind::connectedness, v, 0, second_top,
                       "nodes holding vertex " + std::to_string(v) + " are disconnected (node " +
                           std::to_string(td.node(second_top).id) + ")"};
  }
  return std::nullopt;
}

}  // namespace reldp
