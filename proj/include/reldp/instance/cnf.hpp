#pragma once

#include <cstddef>
#include <vector>

#include "reldp/instance/graph.hpp"

namespace reldp {

/// A clause is a set of non-zero DIMACS literals, kept sorted by variable
/// (negative literal first) without repetitions. Complementary literals are
/// kept as given.
using Clause = std::vector<int>;

/// Sorts and deduplicates literals in place.
void normalize_clause(Clause& c);

/// Variables of a clause, ascending.
std::vector<int> clause_variables(const Clause& c);

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Unweighted partial MaxSAT: satisfy all hard clauses, maximize the number of
/// satisfied soft clauses.
struct PartialMaxSatInstance {
  CnfFormula hard;
  std::vector<Clause> soft;

  int num_vars() const noexcept { return hard.num_vars; }

  friend bool operator==(const PartialMaxSatInstance&, const PartialMaxSatInstance&) = default;
};

/// Variables are vertices; two variables are adjacent iff they share a clause.
Graph primal_graph(const CnfFormula& f);
/// Primal graph of hard and soft clauses together.
Graph primal_graph(const PartialMaxSatInstance& inst);

/// Variables that occur in no clause.
std::vector<int> unused_variables(const CnfFormula& f);

}  // namespace reldp
