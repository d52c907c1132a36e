#include "reldp/instance/cnf.hpp"

#include <algorithm>
#include <cstdlib>

namespace reldp {

void normalize_clause(Clause& c) {
  std::sort(c.begin(), c.end(), [](int a, int b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a < b;
  });
  c.erase(std::unique(c.begin(), c.end()), c.end());
}

std::vector<int> clause_variables(const Clause& c) {
  std::vector<int> vars;
  vars.reserve(c.size());
  for (int lit : c) vars.push_back(std::abs(lit));
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

namespace {

void add_clique(Graph& g, const Clause& c) {
  const auto vars = clause_variables(c);
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j) g.add_edge(vars[i], vars[j]);
}

}  // namespace

Graph primal_graph(const CnfFormula& f) {
  Graph g(f.num_vars);
  for (const auto& c : f.clauses) add_clique(g, c);
  return g;
}

Graph primal_graph(const PartialMaxSatInstance& inst) {
  Graph g = primal_graph(inst.hard);
  for (const auto& c : inst.soft) add_clique(g, c);
  return g;
}

std::vector<int> unused_variables(const CnfFormula& f) {
  std::vector<char> used(static_cast<std::size_t>(f.num_vars) + 1, 0);
  for (const auto& c : f.clauses)
    for (int lit : c) used[std::abs(lit)] = 1;
  std::vector<int> out;
  for (int v = 1; v <= f.num_vars; ++v)
    if (!used[v]) out.push_back(v);
  return out;
}

}  // namespace reldp
