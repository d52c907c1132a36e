#pragma once

#include <cstdint>
#include <string>

#include "reldp/bigint.hpp"

namespace reldp::relalg {

enum class DomainKind : std::uint8_t {
  boolean,  // {0, 1}
  bounded,  // lo..hi
  counter,  // non-negative, arbitrary precision
  measure,  // signed 64-bit integer
};

struct Domain {
  DomainKind kind = DomainKind::boolean;
  std::int64_t lo = 0;
  std::int64_t hi = 1;

  static Domain boolean() { return {DomainKind::boolean, 0, 1}; }
  static Domain bounded(std::int64_t lo, std::int64_t hi) { return {DomainKind::bounded, lo, hi}; }
  static Domain counter() { return {DomainKind::counter, 0, 0}; }
  static Domain measure() { return {DomainKind::measure, 0, 0}; }

  /// Counter columns are stored as big integers, everything else as int64.
  bool wide() const noexcept { return kind == DomainKind::counter; }

  bool contains(std::int64_t v) const noexcept;
  bool contains(const BigInt& v) const;

  std::string to_string() const;

  friend bool operator==(const Domain&, const Domain&) = default;
};

struct Column {
  std::string name;
  Domain domain;

  friend bool operator==(const Column&, const Column&) = default;
};

inline Column bool_column(std::string name) { return {std::move(name), Domain::boolean()}; }
inline Column bounded_column(std::string name, std::int64_t lo, std::int64_t hi) {
  return {std::move(name), Domain::bounded(lo, hi)};
}
inline Column counter_column(std::string name) { return {std::move(name), Domain::counter()}; }
inline Column measure_column(std::string name) { return {std::move(name), Domain::measure()}; }

}  // namespace reldp::relalg
