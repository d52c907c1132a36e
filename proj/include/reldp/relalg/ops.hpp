#pragma once

#include <map>
#include <string>
#include <vector>

#include "reldp/relalg/formula.hpp"
#include "reldp/relalg/table.hpp"
#include "reldp/relalg/value_expr.hpp"

namespace reldp::relalg {

/// `target ← expr` in an extended projection.
struct Assignment {
  Column target;
  ValueExpr expr;
};

enum class AggregateKind { sum, min, max };

struct Aggregate {
  AggregateKind kind = AggregateKind::sum;
  ValueExpr arg;
};

/// `target ← aggregate` in a grouping.
struct AggregateColumn {
  Column target;
  Aggregate aggregate;
};

std::string to_string(AggregateKind k);

// All operators are pure and return sets. Row caps bound the size of the
// produced table; exceeding one raises CapacityError.

/// ρ_m: renames every column; `mapping` must cover all columns of `t`
/// (identity entries allowed) and be injective.
Table rename(const Table& t, const std::map<std::string, std::string>& mapping);

/// σ_φ
Table select(const Table& t, const Formula& phi);

/// t1 × t2 over disjoint column sets.
Table cross_join(const Table& t1, const Table& t2, std::size_t row_cap = kNoRowLimit);

/// t1 ⋈_φ t2 = σ_φ(t1 × t2). Top-level conjuncts of the form `a = b` with a
/// on one side and b on the other are evaluated by hashing; the rest is a
/// per-row filter.
Table theta_join(const Table& t1, const Table& t2, const Formula& phi, std::size_t row_cap = kNoRowLimit);

/// Π_A; output columns follow the order of `keep`.
Table project(const Table& t, const std::vector<std::string>& keep);

/// Π̇_{A,S}: keeps `keep`, then appends one computed column per assignment.
Table extended_project(const Table& t, const std::vector<std::string>& keep,
                       const std::vector<Assignment>& computed);

/// _A G_{out}: one row per distinct value of `group_by`, extended by the
/// aggregates over all rows of that group.
Table group_aggregate(const Table& t, const std::vector<std::string>& group_by,
                      const std::vector<AggregateColumn>& aggregates);

}  // namespace reldp::relalg
