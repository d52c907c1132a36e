#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "reldp/error.hpp"
#include "reldp/problems/problems.hpp"

namespace reldp::problems {

namespace {

void guard(int n, const char* what) {
  if (n > kOracleMaxSize)
    throw OracleLimitError(std::string(what) + " oracle refuses " + std::to_string(n) + " > " +
                           std::to_string(kOracleMaxSize) + " variables/vertices");
}

bool satisfied(const Clause& c, std::uint32_t assignment) {
  for (int lit : c) {
    const bool value = (assignment >> (std::abs(lit) - 1)) & 1u;
    if ((lit > 0) == value) return true;
  }
  return false;
}

bool all_satisfied(const std::vector<Clause>& clauses, std::uint32_t assignment) {
  for (const auto& c : clauses)
    if (!satisfied(c, assignment)) return false;
  return true;
}

bool in(std::uint32_t set, int v) { return (set >> (v - 1)) & 1u; }

}  // namespace

engine::Solution oracle_sharpsat(const CnfFormula& f, FreeVars free_vars) {
  guard(f.num_vars, "#SAT");
  BigInt count = 0;
  for (std::uint32_t a = 0; a < (1u << f.num_vars); ++a)
    if (all_satisfied(f.clauses, a)) count += 1;
  if (free_vars == FreeVars::ignore) {
    for (std::size_t i = 0; i < unused_variables(f).size(); ++i) count /= 2;
  }
  return engine::Solution::count(count);
}

engine::Solution oracle_col(const Graph& g, int colors) {
  guard(g.num_vertices(), "#COL");
  if (colors < 1) throw std::invalid_argument("number of colors must be at least 1");
  const int n = g.num_vertices();
  double space = 1;
  for (int i = 0; i < n; ++i) space *= colors;
  if (space > static_cast<double>(1u << 30)) throw OracleLimitError("#COL oracle refuses more than 2^30 colorings");
  std::vector<int> color(n + 1, 0);
  BigInt count = 0;
  for (;;) {
    bool proper = true;
    for (const auto& [u, v] : g.edges())
      if (color[u] == color[v]) {
        proper = false;
        break;
      }
    if (proper) count += 1;
    int i = 1;
    while (i <= n && ++color[i] == colors) color[i++] = 0;
    if (i > n) break;
  }
  return engine::Solution::count(count);
}

engine::Solution oracle_vc(const Graph& g) {
  guard(g.num_vertices(), "VC");
  int best = g.num_vertices();
  for (std::uint32_t s = 0; s < (1u << g.num_vertices()); ++s) {
    const int size = __builtin_popcount(s);
    if (size >= best) continue;
    bool cover = true;
    for (const auto& [u, v] : g.edges())
      if (!in(s, u) && !in(s, v)) {
        cover = false;
        break;
      }
    if (cover) best = size;
  }
  return engine::Solution::optimum(best);
}

engine::Solution oracle_maxsat(const PartialMaxSatInstance& inst) {
  guard(inst.num_vars(), "MaxSAT");
  long best = -1;
  for (std::uint32_t a = 0; a < (1u << inst.num_vars()); ++a) {
    if (!all_satisfied(inst.hard.clauses, a)) continue;
    long sat = 0;
    for (const auto& c : inst.soft) sat += satisfied(c, a);
    best = std::max(best, sat);
  }
  if (best < 0) return engine::Solution::unsat();
  return engine::Solution::optimum(best);
}

engine::Solution oracle_ids(const Graph& g) {
  guard(g.num_vertices(), "IDS");
  const int n = g.num_vertices();
  const auto adj = g.adjacency();
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size >= best) continue;
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if (in(s, u) && in(s, v)) ok = false;
    for (int u = 1; ok && u <= n; ++u) {
      bool dominated = in(s, u);
      for (int v : adj[u]) dominated = dominated || in(s, v);
      ok = dominated;
    }
    if (ok) best = size;
  }
  return engine::Solution::optimum(n == 0 ? 0 : best);
}

}  // namespace reldp::problems
