#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reldp/bigint.hpp"
#include "reldp/relalg/column.hpp"

namespace reldp::relalg {

inline constexpr std::size_t kNoRowLimit = std::numeric_limits<std::size_t>::max();

/// A finite set of rows over an ordered list of uniquely named columns.
///
/// Storage is row-major and split by width: boolean, bounded and measure
/// columns live in one int64 array, counter columns in a parallel array of
/// big integers. A column's position in either array is its Slot.
///
/// Operators keep the set invariant by calling make_set() whenever they can
/// produce duplicates; tables built through from_rows() are deduplicated on
/// construction. Row order is an implementation detail and carries no
/// meaning; sort_canonical() fixes one for printing.
class Table {
 public:
  struct Slot {
    bool wide = false;
    std::uint32_t index = 0;
  };

  /// No columns, no rows.
  Table() = default;
  /// Empty table over `columns`. Throws SchemaError on duplicate names.
  explicit Table(std::vector<Column> columns);

  /// The table holding a single row over no columns.
  static Table unit();

  /// Checked construction; values are given in column order. Duplicate rows
  /// collapse.
  static Table from_rows(std::vector<Column> columns, const std::vector<std::vector<BigInt>>& rows);

  const std::vector<Column>& columns() const noexcept { return columns_; }
  std::size_t num_columns() const noexcept { return columns_.size(); }
  std::size_t size() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_ == 0; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws SchemaError when the column is absent.
  std::size_t index_of(std::string_view name) const;
  bool has_column(std::string_view name) const { return find(name).has_value(); }
  std::vector<std::string> column_names() const;

  Slot slot(std::size_t column) const { return slots_[column]; }
  std::size_t scalar_width() const noexcept { return scalar_width_; }
  std::size_t wide_width() const noexcept { return wide_width_; }

  std::span<const std::int64_t> scalars(std::size_t row) const {
    return {scalars_.data() + row * scalar_width_, scalar_width_};
  }
  std::span<const BigInt> wides(std::size_t row) const {
    return {wides_.data() + row * wide_width_, wide_width_};
  }

  std::int64_t scalar(std::size_t row, std::size_t column) const;
  const BigInt& wide(std::size_t row, std::size_t column) const;
  BigInt value(std::size_t row, std::size_t column) const;
  BigInt value(std::size_t row, std::string_view column) const { return value(row, index_of(column)); }

  void reserve(std::size_t rows);
  /// Unchecked append used by the operators; spans must match the widths.
  void append(std::span<const std::int64_t> scalars, std::span<const BigInt> wides);
  /// Drops the most recently appended row.
  void pop_back();
  /// Checked append of one row given in column order.
  void push_row(std::span<const BigInt> values);

  /// Removes duplicate rows (set semantics).
  void make_set();
  /// Sorts rows lexicographically over the column order.
  void sort_canonical();

  /// One row per line, columns in declared order, values space-separated,
  /// rows in canonical order.
  std::string to_text() const;

 private:
  bool row_less(std::size_t a, std::size_t b) const;
  void permute(const std::vector<std::size_t>& order);

  std::vector<Column> columns_;
  std::vector<Slot> slots_;
  std::size_t scalar_width_ = 0;
  std::size_t wide_width_ = 0;
  std::size_t rows_ = 0;
  std::vector<std::int64_t> scalars_;
  std::vector<BigInt> wides_;
};

/// Set equality over equally named columns, independent of column order and
/// row order. Column domains must agree as well.
bool same_rows(const Table& a, const Table& b);

/// Hash of a row restricted to the given column indices.
std::size_t hash_row(const Table& t, std::size_t row, std::span<const std::size_t> columns);

}  // namespace reldp::relalg
