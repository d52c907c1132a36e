#include "reldp/engine/context.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>

namespace reldp::engine {

std::string vertex_column(int v) { return "v" + std::to_string(v); }

std::optional<int> parse_vertex_column(std::string_view name) {
  if (name.size() < 2 || name[0] != 'v') return std::nullopt;
  int v = 0;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(name.data() + 1, last, v);
  if (ec != std::errc() || ptr != last || v < 1) return std::nullopt;
  return v;
}

namespace {

std::vector<int> set_union_of(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<NodeContext> make_contexts(const TreeDecomposition& td, bool full_bags) {
  const std::size_t n = td.size();
  std::vector<std::vector<int>> kept(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = td.node(static_cast<int>(i));
    if (full_bags) {
      kept[i] = node.bag;
    } else if (node.parent >= 0) {
      const auto& pb = td.node(node.parent).bag;
      std::set_intersection(node.bag.begin(), node.bag.end(), pb.begin(), pb.end(), std::back_inserter(kept[i]));
    }
  }
  std::vector<NodeContext> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = td.node(static_cast<int>(i));
    auto& ctx = out[i];
    ctx.index = static_cast<int>(i);
    ctx.id = node.id;
    ctx.root = node.parent < 0;
    ctx.bag = node.bag;
    ctx.kept = kept[i];
    std::vector<int> below;
    for (int c : node.children) {
      ctx.child_kept.push_back(kept[c]);
      below = set_union_of(below, kept[c]);
    }
    ctx.introduced = set_minus(node.bag, below);
    ctx.available = set_union_of(node.bag, below);
    ctx.removed = set_minus(ctx.available, ctx.kept);
  }
  return out;
}

}  // namespace reldp::engine
