#include <stdexcept>

#include "common.hpp"
#include "reldp/problems/problems.hpp"

namespace reldp::problems {

using namespace relalg;
using engine::LocalInstance;
using engine::NodeContext;

namespace {

const Column kCnt = counter_column("cnt");

// Shared by #SAT and #o-COL: a counter that is summed on removal and
// multiplied across children.
class CountingBundle : public engine::ProblemBundle {
 public:
  std::vector<Column> aux_columns(const NodeContext&) const override { return {kCnt}; }
  Table leaf_table(const NodeContext&) const override { return detail::seed_table(kCnt, 1); }
  std::vector<AggregateColumn> rem_aggr(const NodeContext&, const LocalInstance&) const override {
    return {{kCnt, {AggregateKind::sum, ValueExpr::column(kCnt.name)}}};
  }
  std::vector<Assignment> join_add_cols(const NodeContext& node) const override {
    return {detail::combine_children(kCnt, node.child_kept.size(), true)};
  }
  engine::Solution finalize(const Table& root) const override {
    if (root.empty()) return engine::Solution::count(0);
    return engine::Solution::count(root.value(0, kCnt.name));
  }
};

class SharpSatBundle final : public CountingBundle {
 public:
  SharpSatBundle(CnfFormula f, FreeVars free_vars)
      : formula_(std::move(f)), graph_(primal_graph(formula_)), index_(formula_.clauses, formula_.num_vars) {
    if (free_vars == FreeVars::ignore)
      for (int v : unused_variables(formula_)) pinned_.push_back(v);
  }

  std::string name() const override { return "sharpsat"; }
  const Graph& graph() const override { return graph_; }

  LocalInstance local_instance(const NodeContext& node) const override {
    LocalInstance local;
    local.clauses = index_.covered(node.bag);
    return local;
  }

  Table intr_table(int v, const NodeContext&) const override {
    if (detail::contains(pinned_, v)) return detail::vertex_table(v, Domain::boolean(), {0});
    return detail::vertex_table(v, Domain::boolean(), {0, 1});
  }

  Formula intr_filter(const NodeContext&, const LocalInstance& local) const override {
    std::vector<Formula> parts;
    for (const auto& c : local.clauses) parts.push_back(engine::clause_formula(c));
    return Formula::all_of(std::move(parts));
  }

 private:
  CnfFormula formula_;
  Graph graph_;
  detail::ClauseIndex index_;
  std::vector<int> pinned_;
};

class ColBundle final : public CountingBundle {
 public:
  ColBundle(Graph g, int colors) : graph_(std::move(g)), adjacency_(graph_.adjacency()), colors_(colors) {
    if (colors < 1) throw std::invalid_argument("number of colors must be at least 1");
  }

  std::string name() const override { return "col"; }
  const Graph& graph() const override { return graph_; }

  LocalInstance local_instance(const NodeContext& node) const override {
    LocalInstance local;
    local.edges = detail::local_edges(adjacency_, node.bag);
    return local;
  }

  Table intr_table(int v, const NodeContext&) const override {
    std::vector<long> values;
    for (long c = 0; c < colors_; ++c) values.push_back(c);
    return detail::vertex_table(v, Domain::bounded(0, colors_ - 1), values);
  }

  Formula intr_filter(const NodeContext&, const LocalInstance& local) const override {
    std::vector<Formula> parts;
    for (const auto& [u, v] : local.edges)
      parts.push_back(!Formula::equals_column(engine::vertex_column(u), engine::vertex_column(v)));
    return Formula::all_of(std::move(parts));
  }

 private:
  Graph graph_;
  std::vector<std::vector<int>> adjacency_;
  int colors_;
};

}  // namespace

std::unique_ptr<engine::ProblemBundle> sharpsat_bundle(CnfFormula f, FreeVars free_vars) {
  return std::make_unique<SharpSatBundle>(std::move(f), free_vars);
}

std::unique_ptr<engine::ProblemBundle> col_bundle(Graph g, int colors) {
  return std::make_unique<ColBundle>(std::move(g), colors);
}

}  // namespace reldp::problems
