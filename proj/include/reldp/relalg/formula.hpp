#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace reldp::relalg {

class Table;

/// Boolean combination of equality atoms `col = const` and `col = col'`.
///
/// Immutable and cheap to copy; subtrees are shared.
class Formula {
 public:
  enum class Kind { constant, equals_value, equals_column, conjunction, disjunction, negation };

  /// Defaults to the tautology.
  Formula();

  static Formula truth();
  static Formula falsity();
  static Formula equals(std::string column, std::int64_t value);
  static Formula equals_column(std::string lhs, std::string rhs);
  /// Shorthands for boolean columns: `v` means v=1, `not v` means v=0.
  static Formula holds(std::string column) { return equals(std::move(column), 1); }
  static Formula fails(std::string column) { return equals(std::move(column), 0); }
  static Formula all_of(std::vector<Formula> parts);
  static Formula any_of(std::vector<Formula> parts);
  static Formula negate(Formula f);

  friend Formula operator&&(Formula a, Formula b) { return all_of({std::move(a), std::move(b)}); }
  friend Formula operator||(Formula a, Formula b) { return any_of({std::move(a), std::move(b)}); }
  friend Formula operator!(Formula a) { return negate(std::move(a)); }

  Kind kind() const;
  bool constant_value() const;
  const std::string& column() const;
  const std::string& other_column() const;
  std::int64_t value() const;
  const std::vector<Formula>& children() const;

  bool is_truth() const { return kind() == Kind::constant && constant_value(); }

  /// Top-level conjuncts, with nested conjunctions flattened and
  /// tautologies dropped.
  std::vector<Formula> conjuncts() const;
  void collect_columns(std::set<std::string>& out) const;
  std::set<std::string> columns() const;

  /// Algebra-style rendering, e.g. `(v1 ∨ ¬v2) ∧ v3=v3@1`.
  std::string to_string() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A formula resolved against a table schema for repeated evaluation.
class BoundFormula {
 public:
  /// Throws SchemaError when a leaf names a column the schema lacks.
  BoundFormula(const Formula& f, const Table& schema);

  bool operator()(const Table& t, std::size_t row) const { return eval(t, row, root_); }

 private:
  struct Op {
    Formula::Kind kind;
    bool truth = false;
    std::size_t lhs = 0;  // column index
    std::size_t rhs = 0;  // column index
    std::int64_t value = 0;
    std::uint32_t first = 0;  // children are ops_[first, first + count)
    std::uint32_t count = 0;
  };
  std::uint32_t compile(const Formula& f, const Table& schema);
  bool eval(const Table& t, std::size_t row, std::uint32_t op) const;

  std::vector<Op> ops_;
  std::vector<std::uint32_t> children_;
  std::uint32_t root_ = 0;
};

}  // namespace reldp::relalg
