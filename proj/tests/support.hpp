#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "reldp/instance/cnf.hpp"
#include "reldp/instance/graph.hpp"
#include "reldp/relalg/table.hpp"

namespace reldp::testing {

using Rng = std::mt19937_64;

inline std::string data_path(const std::string& name) { return std::string(RELDP_TEST_DATA) + "/" + name; }

inline relalg::Table table(std::vector<relalg::Column> cols, std::initializer_list<std::vector<long>> rows) {
  std::vector<std::vector<BigInt>> big;
  for (const auto& r : rows) {
    std::vector<BigInt> row;
    for (long v : r) row.emplace_back(v);
    big.push_back(std::move(row));
  }
  return relalg::Table::from_rows(std::move(cols), big);
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Random set of rows over the given columns; counters and measures draw
/// from a small range so that collisions happen.
inline relalg::Table random_table(Rng& rng, const std::vector<relalg::Column>& cols, int max_rows) {
  std::vector<std::vector<BigInt>> rows;
  const int n = uniform(rng, 0, max_rows);
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> row;
    for (const auto& c : cols) {
      switch (c.domain.kind) {
        case relalg::DomainKind::boolean: row.emplace_back(uniform(rng, 0, 1)); break;
        case relalg::DomainKind::bounded:
          row.emplace_back(uniform(rng, static_cast<int>(c.domain.lo), static_cast<int>(c.domain.hi)));
          break;
        case relalg::DomainKind::counter: row.emplace_back(uniform(rng, 0, 5)); break;
        case relalg::DomainKind::measure: row.emplace_back(uniform(rng, -3, 5)); break;
      }
    }
    rows.push_back(std::move(row));
  }
  return relalg::Table::from_rows(cols, rows);
}

inline Graph random_graph(Rng& rng, int n, double density) {
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng, density)) g.add_edge(u, v);
  return g;
}

inline Clause random_clause(Rng& rng, int num_vars, int max_len) {
  Clause c;
  const int len = uniform(rng, 1, std::min(max_len, num_vars));
  for (int i = 0; i < len; ++i) {
    const int v = uniform(rng, 1, num_vars);
    c.push_back(coin(rng, 0.5) ? v : -v);
  }
  normalize_clause(c);
  return c;
}

inline CnfFormula random_cnf(Rng& rng, int num_vars, int num_clauses, int max_len) {
  CnfFormula f;
  f.num_vars = num_vars;
  for (int i = 0; i < num_clauses; ++i) f.clauses.push_back(random_clause(rng, num_vars, max_len));
  return f;
}

}  // namespace reldp::testing
