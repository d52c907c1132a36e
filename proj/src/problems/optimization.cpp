#include "common.hpp"
#include "reldp/error.hpp"
#include "reldp/problems/problems.hpp"

namespace reldp::problems {

using namespace relalg;
using engine::LocalInstance;
using engine::NodeContext;
using engine::vertex_column;

namespace {

const Column kCard = measure_column("card");

std::string dominated_column(int v) { return "d" + std::to_string(v); }

engine::Solution optimum_or(const Table& root, bool unsat_allowed, const char* problem) {
  if (root.empty()) {
    if (unsat_allowed) return engine::Solution::unsat();
    throw Error(std::string(problem) + ": empty root table");
  }
  return engine::Solution::optimum(root.value(0, kCard.name));
}

class VcBundle final : public engine::ProblemBundle {
 public:
  explicit VcBundle(Graph g) : graph_(std::move(g)), adjacency_(graph_.adjacency()) {}

  std::string name() const override { return "vc"; }
  const Graph& graph() const override { return graph_; }

  LocalInstance local_instance(const NodeContext& node) const override {
    LocalInstance local;
    local.edges = detail::local_edges(adjacency_, node.bag);
    return local;
  }
  std::vector<Column> aux_columns(const NodeContext&) const override { return {kCard}; }
  Table leaf_table(const NodeContext&) const override { return detail::seed_table(kCard, 0); }
  Table intr_table(int v, const NodeContext&) const override {
    return detail::vertex_table(v, Domain::boolean(), {0, 1});
  }
  Formula intr_filter(const NodeContext&, const LocalInstance& local) const override {
    std::vector<Formula> parts;
    for (const auto& [u, v] : local.edges)
      parts.push_back(Formula::holds(vertex_column(u)) || Formula::holds(vertex_column(v)));
    return Formula::all_of(std::move(parts));
  }
  std::vector<AggregateColumn> rem_aggr(const NodeContext& node, const LocalInstance&) const override {
    return {{kCard, {AggregateKind::min, ValueExpr::column(kCard.name) + detail::removed_sum(node)}}};
  }
  std::vector<Assignment> join_add_cols(const NodeContext& node) const override {
    return {detail::combine_children(kCard, node.child_kept.size(), false)};
  }
  engine::Solution finalize(const Table& root) const override { return optimum_or(root, false, "vc"); }

 private:
  Graph graph_;
  std::vector<std::vector<int>> adjacency_;
};

class MaxSatBundle final : public engine::ProblemBundle {
 public:
  explicit MaxSatBundle(PartialMaxSatInstance inst)
      : inst_(std::move(inst)),
        graph_(primal_graph(inst_)),
        hard_(inst_.hard.clauses, inst_.num_vars()),
        soft_(inst_.soft, inst_.num_vars()) {}

  std::string name() const override { return "maxsat"; }
  const Graph& graph() const override { return graph_; }

  // A soft clause is scored where its last variable leaves scope; all of its
  // variables are still columns there.
  LocalInstance local_instance(const NodeContext& node) const override {
    LocalInstance local;
    local.clauses = hard_.covered(node.bag);
    local.disposed = soft_.covered_touching(node.available, node.removed);
    return local;
  }
  std::vector<Column> aux_columns(const NodeContext&) const override { return {kCard}; }
  Table leaf_table(const NodeContext&) const override { return detail::seed_table(kCard, 0); }
  Table intr_table(int v, const NodeContext&) const override {
    return detail::vertex_table(v, Domain::boolean(), {0, 1});
  }
  Formula intr_filter(const NodeContext&, const LocalInstance& local) const override {
    std::vector<Formula> parts;
    for (const auto& c : local.clauses) parts.push_back(engine::clause_formula(c));
    return Formula::all_of(std::move(parts));
  }
  std::vector<AggregateColumn> rem_aggr(const NodeContext&, const LocalInstance& local) const override {
    std::vector<ValueExpr> terms{ValueExpr::column(kCard.name)};
    for (const auto& c : local.disposed) terms.push_back(ValueExpr::predicate(engine::clause_formula(c)));
    return {{kCard, {AggregateKind::max, ValueExpr::sum(std::move(terms))}}};
  }
  std::vector<Assignment> join_add_cols(const NodeContext& node) const override {
    return {detail::combine_children(kCard, node.child_kept.size(), false)};
  }
  engine::Solution finalize(const Table& root) const override { return optimum_or(root, true, "maxsat"); }

 private:
  PartialMaxSatInstance inst_;
  Graph graph_;
  detail::ClauseIndex hard_;
  detail::ClauseIndex soft_;
};

class IdsBundle final : public engine::ProblemBundle {
 public:
  explicit IdsBundle(Graph g) : graph_(std::move(g)), adjacency_(graph_.adjacency()) {}

  std::string name() const override { return "ids"; }
  const Graph& graph() const override { return graph_; }

  LocalInstance local_instance(const NodeContext& node) const override {
    LocalInstance local;
    local.edges = detail::local_edges(adjacency_, node.bag);
    return local;
  }
  std::vector<Column> aux_columns(const NodeContext& node) const override {
    std::vector<Column> cols{kCard};
    for (int u : node.kept) cols.push_back(bool_column(dominated_column(u)));
    return cols;
  }
  Table leaf_table(const NodeContext&) const override { return detail::seed_table(kCard, 0); }
  Table intr_table(int v, const NodeContext&) const override {
    return Table::from_rows({bool_column(vertex_column(v)), bool_column(dominated_column(v))}, {{0, 0}, {1, 1}});
  }
  Formula intr_filter(const NodeContext&, const LocalInstance& local) const override {
    std::vector<Formula> parts;
    for (const auto& [u, v] : local.edges)
      parts.push_back(Formula::fails(vertex_column(u)) || Formula::fails(vertex_column(v)));
    return Formula::all_of(std::move(parts));
  }
  std::vector<Assignment> intr_add_cols(const NodeContext& node, const LocalInstance& local) const override {
    std::vector<Assignment> out;
    for (int u : node.bag) {
      std::vector<ValueExpr> terms{ValueExpr::column(dominated_column(u))};
      for (const auto& [a, b] : local.edges) {
        if (a == u) terms.push_back(ValueExpr::column(vertex_column(b)));
        if (b == u) terms.push_back(ValueExpr::column(vertex_column(a)));
      }
      if (terms.size() > 1) out.push_back({bool_column(dominated_column(u)), ValueExpr::any(std::move(terms))});
    }
    return out;
  }
  Formula rem_filter(const NodeContext& node) const override {
    std::vector<Formula> parts;
    for (int a : node.removed) parts.push_back(Formula::holds(dominated_column(a)));
    return Formula::all_of(std::move(parts));
  }
  std::vector<std::string> rem_cols(int v) const override { return {dominated_column(v)}; }
  std::vector<std::string> rem_group_cols(const NodeContext& node) const override {
    std::vector<std::string> out;
    for (int u : node.kept) out.push_back(dominated_column(u));
    return out;
  }
  std::vector<AggregateColumn> rem_aggr(const NodeContext& node, const LocalInstance&) const override {
    return {{kCard, {AggregateKind::min, ValueExpr::column(kCard.name) + detail::removed_sum(node)}}};
  }
  std::vector<Assignment> join_add_cols(const NodeContext& node) const override {
    std::vector<Assignment> out{detail::combine_children(kCard, node.child_kept.size(), false)};
    std::vector<int> seen;
    for (const auto& kept : node.child_kept) seen.insert(seen.end(), kept.begin(), kept.end());
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (int u : seen) {
      std::vector<ValueExpr> terms;
      for (std::size_t i = 0; i < node.child_kept.size(); ++i)
        if (detail::contains(node.child_kept[i], u))
          terms.push_back(ValueExpr::column(engine::child_column(dominated_column(u), i)));
      out.push_back({bool_column(dominated_column(u)), ValueExpr::any(std::move(terms))});
    }
    return out;
  }
  engine::Solution finalize(const Table& root) const override { return optimum_or(root, false, "ids"); }

 private:
  Graph graph_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace

std::unique_ptr<engine::ProblemBundle> vc_bundle(Graph g) { return std::make_unique<VcBundle>(std::move(g)); }

std::unique_ptr<engine::ProblemBundle> maxsat_bundle(PartialMaxSatInstance inst) {
  return std::make_unique<MaxSatBundle>(std::move(inst));
}

std::unique_ptr<engine::ProblemBundle> ids_bundle(Graph g) { return std::make_unique<IdsBundle>(std::move(g)); }

}  // namespace reldp::problems
