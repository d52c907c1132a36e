#include "reldp/relalg/formula.hpp"

#include <sstream>

#include "reldp/error.hpp"
#include "reldp/relalg/table.hpp"

namespace reldp::relalg {

struct Formula::Node {
  Kind kind = Kind::constant;
  bool truth = true;
  std::string lhs;
  std::string rhs;
  std::int64_t value = 0;
  std::vector<Formula> children;
};

Formula::Formula() : Formula(truth()) {}

Formula Formula::truth() {
  static const auto node = std::make_shared<const Node>(Node{Kind::constant, true, {}, {}, 0, {}});
  return Formula(node);
}

Formula Formula::falsity() {
  static const auto node = std::make_shared<const Node>(Node{Kind::constant, false, {}, {}, 0, {}});
  return Formula(node);
}

Formula Formula::equals(std::string column, std::int64_t value) {
  return Formula(std::make_shared<const Node>(Node{Kind::equals_value, false, std::move(column), {}, value, {}}));
}

Formula Formula::equals_column(std::string lhs, std::string rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::equals_column, false, std::move(lhs), std::move(rhs), 0, {}}));
}

Formula Formula::all_of(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (auto& p : parts) {
    if (p.is_truth()) continue;
    if (p.kind() == Kind::constant) return falsity();
    kept.push_back(std::move(p));
  }
  if (kept.empty()) return truth();
  if (kept.size() == 1) return kept.front();
  return Formula(std::make_shared<const Node>(Node{Kind::conjunction, false, {}, {}, 0, std::move(kept)}));
}

Formula Formula::any_of(std::vector<Formula> parts) {
  std::vector<Formula> kept;
  for (auto& p : parts) {
    if (p.kind() == Kind::constant) {
      if (p.constant_value()) return truth();
      continue;
    }
    kept.push_back(std::move(p));
  }
  if (kept.empty()) return falsity();
  if (kept.size() == 1) return kept.front();
  return Formula(std::make_shared<const Node>(Node{Kind::disjunction, false, {}, {}, 0, std::move(kept)}));
}

Formula Formula::negate(Formula f) {
  if (f.kind() == Kind::constant) return f.constant_value() ? falsity() : truth();
  return Formula(std::make_shared<const Node>(Node{Kind::negation, false, {}, {}, 0, {std::move(f)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
bool Formula::constant_value() const { return node_->truth; }
const std::string& Formula::column() const { return node_->lhs; }
const std::string& Formula::other_column() const { return node_->rhs; }
std::int64_t Formula::value() const { return node_->value; }
const std::vector<Formula>& Formula::children() const { return node_->children; }

std::vector<Formula> Formula::conjuncts() const {
  std::vector<Formula> out;
  if (is_truth()) return out;
  if (kind() != Kind::conjunction) {
    out.push_back(*this);
    return out;
  }
  for (const auto& c : children()) {
    auto sub = c.conjuncts();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

void Formula::collect_columns(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::constant:
      return;
    case Kind::equals_value:
      out.insert(column());
      return;
    case Kind::equals_column:
      out.insert(column());
      out.insert(other_column());
      return;
    default:
      for (const auto& c : children()) c.collect_columns(out);
  }
}

std::set<std::string> Formula::columns() const {
  std::set<std::string> out;
  collect_columns(out);
  return out;
}

std::string Formula::to_string() const {
  switch (kind()) {
    case Kind::constant:
      return constant_value() ? "⊤" : "⊥";
    case Kind::equals_value:
      return column() + "=" + std::to_string(value());
    case Kind::equals_column:
      return column() + "=" + other_column();
    case Kind::negation: {
      const auto& c = children().front();
      if (c.kind() == Kind::equals_value || c.kind() == Kind::equals_column) return "¬" + c.to_string();
      return "¬(" + c.to_string() + ")";
    }
    case Kind::conjunction:
    case Kind::disjunction: {
      std::ostringstream out;
      const char* sep = kind() == Kind::conjunction ? " ∧ " : " ∨ ";
      for (std::size_t i = 0; i < children().size(); ++i) {
        if (i) out << sep;
        const auto& c = children()[i];
        const bool wrap = c.kind() == Kind::conjunction || c.kind() == Kind::disjunction;
        out << (wrap ? "(" : "") << c.to_string() << (wrap ? ")" : "");
      }
      return out.str();
    }
  }
  return "?";
}

BoundFormula::BoundFormula(const Formula& f, const Table& schema) { root_ = compile(f, schema); }

std::uint32_t BoundFormula::compile(const Formula& f, const Table& schema) {
  Op op;
  op.kind = f.kind();
  switch (f.kind()) {
    case Formula::Kind::constant:
      op.truth = f.constant_value();
      break;
    case Formula::Kind::equals_value:
      op.lhs = schema.index_of(f.column());
      op.value = f.value();
      break;
    case Formula::Kind::equals_column:
      op.lhs = schema.index_of(f.column());
      op.rhs = schema.index_of(f.other_column());
      break;
    default: {
      std::vector<std::uint32_t> kids;
      for (const auto& c : f.children()) kids.push_back(compile(c, schema));
      op.first = static_cast<std::uint32_t>(children_.size());
      op.count = static_cast<std::uint32_t>(kids.size());
      children_.insert(children_.end(), kids.begin(), kids.end());
    }
  }
  ops_.push_back(op);
  return static_cast<std::uint32_t>(ops_.size() - 1);
}

bool BoundFormula::eval(const Table& t, std::size_t row, std::uint32_t index) const {
  const Op& op = ops_[index];
  switch (op.kind) {
    case Formula::Kind::constant:
      return op.truth;
    case Formula::Kind::equals_value: {
      const auto s = t.slot(op.lhs);
      if (!s.wide) return t.scalars(row)[s.index] == op.value;
      return t.wides(row)[s.index] == static_cast<long>(op.value);
    }
    case Formula::Kind::equals_column: {
      const auto a = t.slot(op.lhs);
      const auto b = t.slot(op.rhs);
      if (!a.wide && !b.wide) return t.scalars(row)[a.index] == t.scalars(row)[b.index];
      return t.value(row, op.lhs) == t.value(row, op.rhs);
    }
    case Formula::Kind::negation:
      return !eval(t, row, children_[op.first]);
    case Formula::Kind::conjunction:
      for (std::uint32_t i = 0; i < op.count; ++i)
        if (!eval(t, row, children_[op.first + i])) return false;
      return true;
    case Formula::Kind::disjunction:
      for (std::uint32_t i = 0; i < op.count; ++i)
        if (eval(t, row, children_[op.first + i])) return true;
      return false;
  }
  return false;
}

}  // namespace reldp::relalg
