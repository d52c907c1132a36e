#pragma once

#include <string>
#include <vector>

#include "reldp/engine/context.hpp"
#include "reldp/engine/solution.hpp"
#include "reldp/instance/cnf.hpp"
#include "reldp/instance/graph.hpp"
#include "reldp/relalg/ops.hpp"

namespace reldp::engine {

/// The part of the instance visible at one node.
struct LocalInstance {
  std::vector<Clause> clauses;      // (hard) clauses whose variables lie in the bag
  std::vector<Clause> disposed;     // soft clauses scored at this node
  std::vector<Graph::Edge> edges;   // edges with both ends in the bag

  std::string describe() const;
};

/// Placeholder set of the template table algorithm. Every method must be a
/// pure function of its arguments and the bound instance.
class ProblemBundle {
 public:
  virtual ~ProblemBundle() = default;

  virtual std::string name() const = 0;
  /// Graph the decomposition has to cover.
  virtual const Graph& graph() const = 0;

  virtual LocalInstance local_instance(const NodeContext& node) const = 0;

  /// Auxiliary columns of the node's output table.
  virtual std::vector<relalg::Column> aux_columns(const NodeContext& node) const = 0;

  virtual relalg::Table leaf_table(const NodeContext& node) const = 0;
  /// Columns: vertex_column(v) plus any auxiliary columns paired with v.
  virtual relalg::Table intr_table(int v, const NodeContext& node) const = 0;
  virtual relalg::Formula intr_filter(const NodeContext& node, const LocalInstance& local) const = 0;
  virtual std::vector<relalg::Assignment> intr_add_cols(const NodeContext&, const LocalInstance&) const {
    return {};
  }
  virtual relalg::Formula rem_filter(const NodeContext&) const { return relalg::Formula::truth(); }
  /// Auxiliary columns that disappear together with removed vertex v.
  virtual std::vector<std::string> rem_cols(int) const { return {}; }
  /// Auxiliary columns the removal grouping keeps apart.
  virtual std::vector<std::string> rem_group_cols(const NodeContext&) const { return {}; }
  virtual std::vector<relalg::AggregateColumn> rem_aggr(const NodeContext& node, const LocalInstance& local) const = 0;
  /// Over the joined children; auxiliary column x of child i is named `x@i`.
  virtual relalg::Formula join_add_filter(const NodeContext&) const { return relalg::Formula::truth(); }
  virtual std::vector<relalg::Assignment> join_add_cols(const NodeContext& node) const = 0;
  /// Applied after grouping; none of the shipped bundles filters here.
  virtual relalg::Formula group_filter(const NodeContext&) const { return relalg::Formula::truth(); }

  /// Reads the answer off the root table (no vertex columns).
  virtual Solution finalize(const relalg::Table& root) const = 0;
};

/// Name of auxiliary column `name` of the i-th child inside a join.
std::string child_column(const std::string& name, std::size_t child);

/// Clause as a disjunction of `v = 1` / `v = 0` atoms; the empty clause is ⊥.
relalg::Formula clause_formula(const Clause& c);

}  // namespace reldp::engine
