#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "reldp/decomp/tree_decomposition.hpp"
#include "reldp/engine/bundle.hpp"
#include "reldp/engine/solution.hpp"
#include "reldp/relalg/table.hpp"

namespace reldp::engine {

inline constexpr std::size_t kDefaultRowCap = std::size_t{1} << 26;

struct DpConfig {
  int workers = 0;  // 0 picks min(hardware threads, 24)
  std::size_t row_cap = kDefaultRowCap;
  /// Keep whole bags in every table instead of only the parent-shared part.
  bool full_bags = false;
  /// Record per-node traces and keep every table until the run ends.
  bool trace = false;
  /// Apply vertex-only filter conjuncts as soon as their columns exist.
  bool pushdown = true;
  /// Select by remFilter before intrFilter.
  bool rem_filter_first = false;
};

int default_workers();

struct NodeTrace {
  int id = 0;
  std::vector<int> bag;
  std::vector<int> kept;
  std::string local;
  std::size_t input_rows = 0;
  std::size_t candidate_rows = 0;
  relalg::Table table;
};

/// Runs the per-node pipeline on complete child tables (in join order).
relalg::Table compute_node_table(const NodeContext& node, const std::vector<const relalg::Table*>& children,
                                 const ProblemBundle& bundle, const DpConfig& config, NodeTrace* trace = nullptr);

struct DpResult {
  Solution solution;
  std::vector<NodeTrace> trace;  // by ascending node id; empty unless traced
};

/// Bottom-up evaluation. The TD must be valid for bundle.graph() and have an
/// empty root bag; violations raise ValidationError before any table is built.
DpResult run_dp(const TreeDecomposition& td, const ProblemBundle& bundle, const DpConfig& config = {});

/// Human-readable dump, one block per node in ascending id order.
void write_trace(std::ostream& out, const std::vector<NodeTrace>& trace);

}  // namespace reldp::engine
