#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "reldp/engine/bundle.hpp"
#include "reldp/instance/cnf.hpp"

namespace reldp::problems::detail {

inline bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline bool subset_of(const std::vector<int>& a, const std::vector<int>& sorted) {
  return std::all_of(a.begin(), a.end(), [&](int v) { return contains(sorted, v); });
}

/// Finds the clauses whose variables lie in a given vertex set.
class ClauseIndex {
 public:
  ClauseIndex() = default;
  ClauseIndex(const std::vector<Clause>& clauses, int num_vars) : clauses_(&clauses), by_var_(num_vars + 1) {
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      vars_.push_back(clause_variables(clauses[i]));
      if (vars_.back().empty()) empty_.push_back(i);
      for (int v : vars_.back()) by_var_[v].push_back(i);
    }
  }

  /// Clauses c with var(c) ⊆ scope, in input order; empty clauses always match.
  std::vector<Clause> covered(const std::vector<int>& scope) const {
    std::vector<std::size_t> hits = empty_;
    for (int v : scope)
      for (std::size_t i : by_var_[v])
        if (vars_[i].front() == v && subset_of(vars_[i], scope)) hits.push_back(i);
    return collect(hits);
  }

  /// Clauses c with var(c) ⊆ scope that mention some vertex of `touching`.
  std::vector<Clause> covered_touching(const std::vector<int>& scope, const std::vector<int>& touching) const {
    std::vector<std::size_t> hits;
    for (int v : touching)
      for (std::size_t i : by_var_[v])
        if (subset_of(vars_[i], scope)) hits.push_back(i);
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return collect(hits);
  }

 private:
  std::vector<Clause> collect(std::vector<std::size_t>& hits) const {
    std::sort(hits.begin(), hits.end());
    std::vector<Clause> out;
    out.reserve(hits.size());
    for (std::size_t i : hits) out.push_back((*clauses_)[i]);
    return out;
  }

  const std::vector<Clause>* clauses_ = nullptr;
  std::vector<std::vector<int>> vars_;
  std::vector<std::vector<std::size_t>> by_var_;
  std::vector<std::size_t> empty_;
};

/// Edges of g with both ends in the (sorted) scope.
std::vector<Graph::Edge> local_edges(const std::vector<std::vector<int>>& adjacency, const std::vector<int>& scope);

/// One-column table listing `values` for vertex v.
relalg::Table vertex_table(int v, const relalg::Domain& domain, const std::vector<long>& values);

/// Single row with one auxiliary column.
relalg::Table seed_table(const relalg::Column& column, long value);

/// `target ← Σ target@i` or `Π target@i` over all children.
relalg::Assignment combine_children(const relalg::Column& target, std::size_t children, bool product);

/// Σ over the removed vertices' columns.
relalg::ValueExpr removed_sum(const engine::NodeContext& node);

}  // namespace reldp::problems::detail
