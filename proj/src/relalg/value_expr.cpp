#include "reldp/relalg/value_expr.hpp"

#include <sstream>

#include "reldp/error.hpp"
#include "reldp/relalg/table.hpp"

namespace reldp::relalg {

struct ValueExpr::Node {
  Kind kind = Kind::constant;
  BigInt constant;
  std::string column;
  std::vector<ValueExpr> children;
  Formula formula;
};

ValueExpr::ValueExpr() : ValueExpr(constant(0)) {}

ValueExpr ValueExpr::constant(BigInt v) {
  auto n = std::make_shared<Node>();
  n->constant = std::move(v);
  return ValueExpr(std::move(n));
}

ValueExpr ValueExpr::column(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::column;
  n->column = std::move(name);
  return ValueExpr(std::move(n));
}

ValueExpr ValueExpr::nary(Kind kind, std::vector<ValueExpr> parts, long empty_value) {
  if (parts.empty()) return constant(empty_value);
  if (parts.size() == 1) return std::move(parts.front());
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children = std::move(parts);
  return ValueExpr(std::move(n));
}

ValueExpr ValueExpr::sum(std::vector<ValueExpr> terms) { return nary(Kind::sum, std::move(terms), 0); }
ValueExpr ValueExpr::product(std::vector<ValueExpr> factors) { return nary(Kind::product, std::move(factors), 1); }
ValueExpr ValueExpr::any(std::vector<ValueExpr> terms) { return nary(Kind::disjunction, std::move(terms), 0); }
ValueExpr ValueExpr::all(std::vector<ValueExpr> terms) { return nary(Kind::conjunction, std::move(terms), 1); }

ValueExpr ValueExpr::negate(ValueExpr e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::negation;
  n->children.push_back(std::move(e));
  return ValueExpr(std::move(n));
}

ValueExpr ValueExpr::predicate(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::predicate;
  n->formula = std::move(f);
  return ValueExpr(std::move(n));
}

ValueExpr::Kind ValueExpr::kind() const { return node_->kind; }
const BigInt& ValueExpr::constant_value() const { return node_->constant; }
const std::string& ValueExpr::column_name() const { return node_->column; }
const std::vector<ValueExpr>& ValueExpr::children() const { return node_->children; }
const Formula& ValueExpr::formula() const { return node_->formula; }

void ValueExpr::collect_columns(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::constant:
      return;
    case Kind::column:
      out.insert(column_name());
      return;
    case Kind::predicate:
      formula().collect_columns(out);
      return;
    default:
      for (const auto& c : children()) c.collect_columns(out);
  }
}

std::string ValueExpr::to_string() const {
  switch (kind()) {
    case Kind::constant:
      return constant_value().get_str();
    case Kind::column:
      return column_name();
    case Kind::predicate:
      return "[" + formula().to_string() + "]";
    case Kind::negation:
      return "¬" + children().front().to_string();
    default: {
      const char* sep = kind() == Kind::sum           ? " + "
                        : kind() == Kind::product     ? " · "
                        : kind() == Kind::disjunction ? " ∨ "
                                                      : " ∧ ";
      std::ostringstream out;
      out << '(';
      for (std::size_t i = 0; i < children().size(); ++i) out << (i ? sep : "") << children()[i].to_string();
      out << ')';
      return out.str();
    }
  }
}

BoundValueExpr::BoundValueExpr(const ValueExpr& e, const Table& schema) {
  const Typed t = compile(e, schema);
  root_ = t.op;
  boolean_ = t.boolean;
}

BoundValueExpr::Typed BoundValueExpr::compile(const ValueExpr& e, const Table& schema) {
  Op op;
  op.kind = e.kind();
  bool is_bool = false;
  switch (e.kind()) {
    case ValueExpr::Kind::constant:
      op.constant = e.constant_value();
      if (op.constant.fits_slong_p())
        op.small = op.constant.get_si();
      else
        wide_ = true;
      is_bool = op.constant == 0 || op.constant == 1;
      break;
    case ValueExpr::Kind::column: {
      op.column = schema.index_of(e.column_name());
      const auto& dom = schema.columns()[op.column].domain;
      if (dom.wide()) wide_ = true;
      is_bool = dom.kind == DomainKind::boolean;
      break;
    }
    case ValueExpr::Kind::predicate:
      predicates_.emplace_back(e.formula(), schema);
      op.predicate = static_cast<std::uint32_t>(predicates_.size() - 1);
      is_bool = true;
      break;
    default: {
      const bool logical = e.kind() == ValueExpr::Kind::disjunction ||
                           e.kind() == ValueExpr::Kind::conjunction || e.kind() == ValueExpr::Kind::negation;
      std::vector<std::uint32_t> kids;
      for (const auto& c : e.children()) {
        const Typed sub = compile(c, schema);
        if (logical && !sub.boolean)
          throw SchemaError("Boolean connective over non-Boolean operand '" + c.to_string() + "'");
        kids.push_back(sub.op);
      }
      op.first = static_cast<std::uint32_t>(children_.size());
      op.count = static_cast<std::uint32_t>(kids.size());
      children_.insert(children_.end(), kids.begin(), kids.end());
      is_bool = logical;
    }
  }
  ops_.push_back(std::move(op));
  return {static_cast<std::uint32_t>(ops_.size() - 1), is_bool};
}

void BoundValueExpr::eval(const Table& t, std::size_t row, BigInt& out) const {
  if (!wide_) {
    out = static_cast<long>(eval_small(t, row, root_));
    return;
  }
  eval_big(t, row, root_, out);
}

std::int64_t BoundValueExpr::eval_scalar(const Table& t, std::size_t row) const {
  if (wide_) {
    BigInt v;
    eval_big(t, row, root_, v);
    if (!v.fits_slong_p()) throw SchemaError("expression value " + v.get_str() + " exceeds 64 bits");
    return v.get_si();
  }
  return eval_small(t, row, root_);
}

void BoundValueExpr::eval_big(const Table& t, std::size_t row, std::uint32_t index, BigInt& out) const {
  const Op& op = ops_[index];
  switch (op.kind) {
    case ValueExpr::Kind::constant:
      out = op.constant;
      return;
    case ValueExpr::Kind::column: {
      const auto s = t.slot(op.column);
      if (s.wide)
        out = t.wides(row)[s.index];
      else
        out = static_cast<long>(t.scalars(row)[s.index]);
      return;
    }
    case ValueExpr::Kind::predicate:
      out = predicates_[op.predicate](t, row) ? 1 : 0;
      return;
    case ValueExpr::Kind::negation:
      eval_big(t, row, children_[op.first], out);
      out = (out == 0) ? 1 : 0;
      return;
    case ValueExpr::Kind::sum:
    case ValueExpr::Kind::product: {
      const bool is_sum = op.kind == ValueExpr::Kind::sum;
      BigInt part;
      eval_big(t, row, children_[op.first], out);
      for (std::uint32_t i = 1; i < op.count; ++i) {
        eval_big(t, row, children_[op.first + i], part);
        if (is_sum)
          out += part;
        else
          out *= part;
      }
      return;
    }
    case ValueExpr::Kind::disjunction:
    case ValueExpr::Kind::conjunction: {
      const bool is_or = op.kind == ValueExpr::Kind::disjunction;
      BigInt part;
      for (std::uint32_t i = 0; i < op.count; ++i) {
        eval_big(t, row, children_[op.first + i], part);
        if ((part != 0) == is_or) {
          out = is_or ? 1 : 0;
          return;
        }
      }
      out = is_or ? 0 : 1;
      return;
    }
  }
}

std::int64_t BoundValueExpr::eval_small(const Table& t, std::size_t row, std::uint32_t index) const {
  const Op& op = ops_[index];
  switch (op.kind) {
    case ValueExpr::Kind::constant:
      return op.small;
    case ValueExpr::Kind::column:
      return t.scalars(row)[t.slot(op.column).index];
    case ValueExpr::Kind::predicate:
      return predicates_[op.predicate](t, row) ? 1 : 0;
    case ValueExpr::Kind::negation:
      return eval_small(t, row, children_[op.first]) == 0 ? 1 : 0;
    case ValueExpr::Kind::sum:
    case ValueExpr::Kind::product: {
      const bool is_sum = op.kind == ValueExpr::Kind::sum;
      std::int64_t acc = eval_small(t, row, children_[op.first]);
      for (std::uint32_t i = 1; i < op.count; ++i) {
        const std::int64_t v = eval_small(t, row, children_[op.first + i]);
        const bool overflow =
            is_sum ? __builtin_add_overflow(acc, v, &acc) : __builtin_mul_overflow(acc, v, &acc);
        if (overflow) throw SchemaError("64-bit overflow evaluating " + std::string(is_sum ? "sum" : "product"));
      }
      return acc;
    }
    case ValueExpr::Kind::disjunction:
      for (std::uint32_t i = 0; i < op.count; ++i)
        if (eval_small(t, row, children_[op.first + i]) != 0) return 1;
      return 0;
    case ValueExpr::Kind::conjunction:
      for (std::uint32_t i = 0; i < op.count; ++i)
        if (eval_small(t, row, children_[op.first + i]) == 0) return 0;
      return 1;
  }
  return 0;
}

}  // namespace reldp::relalg
