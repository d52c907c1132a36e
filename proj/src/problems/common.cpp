#include "common.hpp"

namespace reldp::problems::detail {

using namespace relalg;

std::vector<Graph::Edge> local_edges(const std::vector<std::vector<int>>& adjacency, const std::vector<int>& scope) {
  std::vector<Graph::Edge> out;
  for (int u : scope)
    for (int v : adjacency[u])
      if (v > u && contains(scope, v)) out.emplace_back(u, v);
  return out;
}

Table vertex_table(int v, const Domain& domain, const std::vector<long>& values) {
  Table t({Column{engine::vertex_column(v), domain}});
  for (long value : values) {
    const BigInt row[] = {BigInt(value)};
    t.push_row(row);
  }
  return t;
}

Table seed_table(const Column& column, long value) {
  Table t({column});
  const BigInt row[] = {BigInt(value)};
  t.push_row(row);
  return t;
}

Assignment combine_children(const Column& target, std::size_t children, bool product) {
  std::vector<ValueExpr> parts;
  for (std::size_t i = 0; i < children; ++i) parts.push_back(ValueExpr::column(engine::child_column(target.name, i)));
  return {target, product ? ValueExpr::product(std::move(parts)) : ValueExpr::sum(std::move(parts))};
}

ValueExpr removed_sum(const engine::NodeContext& node) {
  std::vector<ValueExpr> parts;
  for (int v : node.removed) parts.push_back(ValueExpr::column(engine::vertex_column(v)));
  return ValueExpr::sum(std::move(parts));
}

}  // namespace reldp::problems::detail
