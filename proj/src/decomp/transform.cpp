#include <algorithm>
#include <stdexcept>

#include "reldp/decomp/tree_decomposition.hpp"

namespace reldp {

namespace {

// Mutable tree used while rewriting; indices into `nodes`.
struct Builder {
  std::vector<TdNode> nodes;

  int add(std::vector<int> bag) {
    nodes.push_back(TdNode{static_cast<int>(nodes.size()) + 1, std::move(bag), {}, -1});
    return static_cast<int>(nodes.size()) - 1;
  }
  void attach(int parent, int child) {
    nodes[parent].children.push_back(child);
    nodes[child].parent = parent;
  }
  TreeDecomposition finish(int num_vertices, int root) {
    return renumber_post_order(TreeDecomposition(num_vertices, std::move(nodes), root));
  }
};

}  // namespace

TreeDecomposition limit_children(const TreeDecomposition& td, int k) {
  if (k < 2) throw std::invalid_argument("child limit must be at least 2");
  bool needed = false;
  for (const auto& node : td.nodes()) needed = needed || static_cast<int>(node.children.size()) > k;
  if (!needed) return td;

  Builder b;
  for (const auto& node : td.nodes()) b.add(node.bag);
  for (std::size_t i = 0; i < td.size(); ++i) {
    int host = static_cast<int>(i);
    const auto& children = td.node(host).children;
    std::size_t next = 0;
    while (children.size() - next > static_cast<std::size_t>(k)) {
      for (int taken = 0; taken < k - 1; ++taken) b.attach(host, children[next++]);
      const int extra = b.add(td.node(static_cast<int>(i)).bag);
      b.attach(host, extra);
      host = extra;
    }
    while (next < children.size()) b.attach(host, children[next++]);
  }
  return b.finish(td.num_vertices(), td.root());
}

TreeDecomposition normalize_root(const TreeDecomposition& td) {
  if (td.node(td.root()).bag.empty()) return td;
  std::vector<TdNode> nodes = td.nodes();
  const int root = static_cast<int>(nodes.size());
  nodes.push_back(TdNode{td.max_id() + 1, {}, {td.root()}, -1});
  nodes[td.root()].parent = root;
  return TreeDecomposition(td.num_vertices(), std::move(nodes), root);
}

namespace {

// Builds the nice subtree for `index` and returns its top node, whose bag
// equals the original bag.
int build_nice(const TreeDecomposition& td, int index, Builder& b) {
  const auto& bag = td.node(index).bag;
  std::vector<int> tops;
  for (int c : td.node(index).children) {
    int top = build_nice(td, c, b);
    std::vector<int> current = td.node(c).bag;
    for (int v : td.node(c).bag) {
      if (std::binary_search(bag.begin(), bag.end(), v)) continue;
      current.erase(std::find(current.begin(), current.end(), v));
      const int up = b.add(current);
      b.attach(up, top);
      top = up;
    }
    for (int v : bag) {
      if (std::binary_search(current.begin(), current.end(), v)) continue;
      current.insert(std::lower_bound(current.begin(), current.end(), v), v);
      const int up = b.add(current);
      b.attach(up, top);
      top = up;
    }
    tops.push_back(top);
  }
  if (tops.empty()) {
    int top = b.add({});
    std::vector<int> current;
    for (int v : bag) {
      current.push_back(v);
      const int up = b.add(current);
      b.attach(up, top);
      top = up;
    }
    return top;
  }
  int top = tops.front();
  for (std::size_t i = 1; i < tops.size(); ++i) {
    const int join = b.add(bag);
    b.attach(join, top);
    b.attach(join, tops[i]);
    top = join;
  }
  return top;
}

}  // namespace

TreeDecomposition make_nice(const TreeDecomposition& td) {
  Builder b;
  int top = build_nice(td, td.root(), b);
  std::vector<int> current = td.node(td.root()).bag;
  while (!current.empty()) {
    current.pop_back();
    const int up = b.add(current);
    b.attach(up, top);
    top = up;
  }
  return b.finish(td.num_vertices(), top);
}

}  // namespace reldp
