#pragma once

#include <cstddef>
#include <string>

#include "reldp/bigint.hpp"

namespace reldp::engine {

enum class SolutionKind { count, optimum, unsat };

struct RunStats {
  int width = -1;
  std::size_t node_count = 0;
  std::size_t max_table_rows = 0;
  double wall_seconds = 0.0;
  int workers = 1;
};

struct Solution {
  SolutionKind kind = SolutionKind::count;
  BigInt value = 0;
  RunStats stats;

  static Solution count(BigInt v) { return {SolutionKind::count, std::move(v), {}}; }
  static Solution optimum(BigInt v) { return {SolutionKind::optimum, std::move(v), {}}; }
  static Solution unsat() { return {SolutionKind::unsat, 0, {}}; }

  /// `s <count>`, `o <optimum>` or `s UNSAT`.
  std::string line() const;
  /// The value alone, or UNSAT.
  std::string value_text() const;

  bool same_answer(const Solution& other) const { return kind == other.kind && value == other.value; }
};

}  // namespace reldp::engine
