#include "reldp/relalg/table.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "reldp/error.hpp"
#include "row_hash.hpp"

namespace reldp::relalg {

bool Domain::contains(std::int64_t v) const noexcept {
  switch (kind) {
    case DomainKind::boolean:
      return v == 0 || v == 1;
    case DomainKind::bounded:
      return v >= lo && v <= hi;
    case DomainKind::counter:
      return v >= 0;
    case DomainKind::measure:
      return true;
  }
  return false;
}

bool Domain::contains(const BigInt& v) const {
  if (kind == DomainKind::counter) return sgn(v) >= 0;
  if (!v.fits_slong_p()) return false;
  return contains(static_cast<std::int64_t>(v.get_si()));
}

std::string Domain::to_string() const {
  switch (kind) {
    case DomainKind::boolean:
      return "boolean";
    case DomainKind::bounded:
      return "int[" + std::to_string(lo) + ".." + std::to_string(hi) + "]";
    case DomainKind::counter:
      return "counter";
    case DomainKind::measure:
      return "measure";
  }
  return "?";
}

Table::Table(std::vector<Column> columns) : columns_(std::move(columns)) {
  slots_.reserve(columns_.size());
  std::unordered_set<std::string_view> seen;
  for (const auto& c : columns_) {
    if (!seen.insert(c.name).second) throw SchemaError("duplicate column '" + c.name + "'");
    if (c.domain.kind == DomainKind::bounded && c.domain.lo > c.domain.hi)
      throw SchemaError("empty domain for column '" + c.name + "'");
    if (c.domain.wide())
      slots_.push_back({true, static_cast<std::uint32_t>(wide_width_++)});
    else
      slots_.push_back({false, static_cast<std::uint32_t>(scalar_width_++)});
  }
}

Table Table::unit() {
  Table t;
  t.rows_ = 1;
  return t;
}

Table Table::from_rows(std::vector<Column> columns, const std::vector<std::vector<BigInt>>& rows) {
  Table t(std::move(columns));
  t.reserve(rows.size());
  for (const auto& r : rows) t.push_row(r);
  t.make_set();
  return t;
}

std::optional<std::size_t> Table::find(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Table::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw SchemaError("unknown column '" + std::string(name) + "'");
}

std::vector<std::string> Table::column_names() const {
  std::vector<std::string> names;
  names.reserve(columns_.size());
  for (const auto& c : columns_) names.push_back(c.name);
  return names;
}

std::int64_t Table::scalar(std::size_t row, std::size_t column) const {
  const Slot s = slots_.at(column);
  if (s.wide) throw SchemaError("column '" + columns_[column].name + "' is a counter");
  return scalars_[row * scalar_width_ + s.index];
}

const BigInt& Table::wide(std::size_t row, std::size_t column) const {
  const Slot s = slots_.at(column);
  if (!s.wide) throw SchemaError("column '" + columns_[column].name + "' is not a counter");
  return wides_[row * wide_width_ + s.index];
}

BigInt Table::value(std::size_t row, std::size_t column) const {
  const Slot s = slots_.at(column);
  if (s.wide) return wides_[row * wide_width_ + s.index];
  return BigInt(static_cast<long>(scalars_[row * scalar_width_ + s.index]));
}

void Table::reserve(std::size_t rows) {
  scalars_.reserve(rows * scalar_width_);
  wides_.reserve(rows * wide_width_);
}

void Table::append(std::span<const std::int64_t> scalars, std::span<const BigInt> wides) {
  scalars_.insert(scalars_.end(), scalars.begin(), scalars.end());
  wides_.insert(wides_.end(), wides.begin(), wides.end());
  ++rows_;
}

void Table::pop_back() {
  if (rows_ == 0) return;
  scalars_.resize(scalars_.size() - scalar_width_);
  wides_.resize(wides_.size() - wide_width_);
  --rows_;
}

void Table::push_row(std::span<const BigInt> values) {
  if (values.size() != columns_.size())
    throw SchemaError("row has " + std::to_string(values.size()) + " values, table has " +
                      std::to_string(columns_.size()) + " columns");
  std::vector<std::int64_t> s(scalar_width_);
  std::vector<BigInt> w(wide_width_);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& col = columns_[i];
    if (!col.domain.contains(values[i]))
      throw SchemaError("value " + values[i].get_str() + " outside domain " + col.domain.to_string() +
                        " of column '" + col.name + "'");
    if (slots_[i].wide)
      w[slots_[i].index] = values[i];
    else
      s[slots_[i].index] = values[i].get_si();
  }
  append(s, w);
}

void Table::make_set() {
  if (rows_ <= 1) return;
  if (columns_.empty()) {
    rows_ = 1;
    return;
  }
  std::vector<std::size_t> all(columns_.size());
  std::iota(all.begin(), all.end(), 0);
  RowKeyHash hash{this, all};
  RowKeyEq eq{this, this, all, all};
  std::unordered_set<std::size_t, RowKeyHash, RowKeyEq> seen(rows_ * 2, hash, eq);
  std::vector<std::size_t> keep;
  keep.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (seen.insert(r).second) keep.push_back(r);
  if (keep.size() != rows_) permute(keep);
}

bool Table::row_less(std::size_t a, std::size_t b) const {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const Slot s = slots_[c];
    if (s.wide) {
      const int cmpv = cmp(wides_[a * wide_width_ + s.index], wides_[b * wide_width_ + s.index]);
      if (cmpv != 0) return cmpv < 0;
    } else {
      const auto x = scalars_[a * scalar_width_ + s.index];
      const auto y = scalars_[b * scalar_width_ + s.index];
      if (x != y) return x < y;
    }
  }
  return false;
}

void Table::permute(const std::vector<std::size_t>& order) {
  std::vector<std::int64_t> s;
  std::vector<BigInt> w;
  s.reserve(order.size() * scalar_width_);
  w.reserve(order.size() * wide_width_);
  for (std::size_t r : order) {
    auto sr = scalars(r);
    s.insert(s.end(), sr.begin(), sr.end());
    for (std::size_t i = 0; i < wide_width_; ++i) w.push_back(std::move(wides_[r * wide_width_ + i]));
  }
  scalars_ = std::move(s);
  wides_ = std::move(w);
  rows_ = order.size();
}

void Table::sort_canonical() {
  if (columns_.empty() || rows_ <= 1) return;
  std::vector<std::size_t> order(rows_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) { return row_less(a, b); });
  permute(order);
}

std::string Table::to_text() const {
  Table sorted = *this;
  sorted.sort_canonical();
  std::ostringstream out;
  for (std::size_t r = 0; r < sorted.rows_; ++r) {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (c) out << ' ';
      const Slot s = slots_[c];
      if (s.wide)
        out << sorted.wides_[r * wide_width_ + s.index].get_str();
      else
        out << sorted.scalars_[r * scalar_width_ + s.index];
    }
    out << '\n';
  }
  return out.str();
}

bool same_rows(const Table& a, const Table& b) {
  if (a.num_columns() != b.num_columns() || a.size() != b.size()) return false;
  std::vector<std::size_t> a_cols(a.num_columns());
  std::vector<std::size_t> b_cols(a.num_columns());
  for (std::size_t i = 0; i < a.num_columns(); ++i) {
    auto j = b.find(a.columns()[i].name);
    if (!j || b.columns()[*j].domain != a.columns()[i].domain) return false;
    a_cols[i] = i;
    b_cols[i] = *j;
  }
  if (a.num_columns() == 0) return true;
  // Both sides are sets of equal size, so containment of b in a suffices.
  std::unordered_multimap<std::size_t, std::size_t> by_hash;
  by_hash.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) by_hash.emplace(hash_row(a, r, a_cols), r);
  RowKeyEq eq_ab{&a, &b, a_cols, b_cols};
  for (std::size_t r = 0; r < b.size(); ++r) {
    auto [lo, hi] = by_hash.equal_range(hash_row(b, r, b_cols));
    bool found = false;
    for (auto it = lo; it != hi && !found; ++it) found = eq_ab(it->second, r);
    if (!found) return false;
  }
  return true;
}

std::size_t hash_row(const Table& t, std::size_t row, std::span<const std::size_t> columns) {
  return RowKeyHash{&t, {columns.begin(), columns.end()}}(row);
}

}  // namespace reldp::relalg
