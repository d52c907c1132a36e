#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "reldp/bigint.hpp"
#include "reldp/relalg/formula.hpp"

namespace reldp::relalg {

class Table;

/// Per-row arithmetic/Boolean expression used by extended projection and
/// aggregation: constants, column references, +, ·, ∨, ∧, ¬ and embedded
/// 0/1-valued equality formulas.
///
/// Boolean connectives accept only Boolean-typed operands (boolean columns,
/// predicates, the constants 0/1 and other connectives); this is checked when
/// the expression is bound to a schema.
class ValueExpr {
 public:
  enum class Kind { constant, column, sum, product, disjunction, conjunction, negation, predicate };

  /// Defaults to the constant 0.
  ValueExpr();

  static ValueExpr constant(BigInt v);
  static ValueExpr column(std::string name);
  static ValueExpr sum(std::vector<ValueExpr> terms);
  static ValueExpr product(std::vector<ValueExpr> factors);
  static ValueExpr any(std::vector<ValueExpr> terms);
  static ValueExpr all(std::vector<ValueExpr> terms);
  static ValueExpr negate(ValueExpr e);
  /// 1 when the formula holds on the row, else 0.
  static ValueExpr predicate(Formula f);

  friend ValueExpr operator+(ValueExpr a, ValueExpr b) { return sum({std::move(a), std::move(b)}); }
  friend ValueExpr operator*(ValueExpr a, ValueExpr b) { return product({std::move(a), std::move(b)}); }

  Kind kind() const;
  const BigInt& constant_value() const;
  const std::string& column_name() const;
  const std::vector<ValueExpr>& children() const;
  const Formula& formula() const;

  void collect_columns(std::set<std::string>& out) const;
  std::string to_string() const;

 private:
  struct Node;
  explicit ValueExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ValueExpr nary(Kind kind, std::vector<ValueExpr> parts, long empty_value);
  std::shared_ptr<const Node> node_;
};

/// A ValueExpr resolved against a schema.
class BoundValueExpr {
 public:
  /// Throws SchemaError on unknown columns or Boolean connectives applied to
  /// non-Boolean operands.
  BoundValueExpr(const ValueExpr& e, const Table& schema);

  /// True when evaluation needs arbitrary precision (a counter column or a
  /// constant outside int64 participates).
  bool wide() const noexcept { return wide_; }
  bool boolean() const noexcept { return boolean_; }

  void eval(const Table& t, std::size_t row, BigInt& out) const;
  /// int64 evaluation; throws SchemaError on overflow. Requires !wide().
  std::int64_t eval_scalar(const Table& t, std::size_t row) const;

 private:
  struct Op {
    ValueExpr::Kind kind;
    std::size_t column = 0;
    BigInt constant;
    std::int64_t small = 0;
    std::uint32_t first = 0;
    std::uint32_t count = 0;
    std::uint32_t predicate = 0;
  };
  struct Typed {
    std::uint32_t op;
    bool boolean;
  };
  Typed compile(const ValueExpr& e, const Table& schema);
  void eval_big(const Table& t, std::size_t row, std::uint32_t op, BigInt& out) const;
  std::int64_t eval_small(const Table& t, std::size_t row, std::uint32_t op) const;

  std::vector<Op> ops_;
  std::vector<std::uint32_t> children_;
  std::vector<BoundFormula> predicates_;
  std::uint32_t root_ = 0;
  bool wide_ = false;
  bool boolean_ = false;
};

}  // namespace reldp::relalg
