#include "reldp/engine/bundle.hpp"

#include <cstdlib>
#include <sstream>

namespace reldp::engine {

namespace {

void write_clauses(std::ostringstream& os, const char* label, const std::vector<Clause>& clauses) {
  if (clauses.empty()) return;
  if (os.tellp() > 0) os << ' ';
  os << label;
  for (const auto& c : clauses) {
    os << " {";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << '}';
  }
}

}  // namespace

std::string LocalInstance::describe() const {
  std::ostringstream os;
  write_clauses(os, "clauses", clauses);
  write_clauses(os, "disposed", disposed);
  if (!edges.empty()) {
    if (os.tellp() > 0) os << ' ';
    os << "edges";
    for (const auto& [u, v] : edges) os << " {" << u << ' ' << v << '}';
  }
  const auto s = os.str();
  return s.empty() ? "none" : s;
}

std::string child_column(const std::string& name, std::size_t child) { return name + "@" + std::to_string(child); }

relalg::Formula clause_formula(const Clause& c) {
  std::vector<relalg::Formula> lits;
  lits.reserve(c.size());
  for (int lit : c)
    lits.push_back(lit > 0 ? relalg::Formula::holds(vertex_column(lit)) : relalg::Formula::fails(vertex_column(-lit)));
  return relalg::Formula::any_of(std::move(lits));
}

std::string Solution::value_text() const { return kind == SolutionKind::unsat ? "UNSAT" : value.get_str(); }

std::string Solution::line() const {
  switch (kind) {
    case SolutionKind::count: return "s " + value.get_str();
    case SolutionKind::optimum: return "o " + value.get_str();
    case SolutionKind::unsat: return "s UNSAT";
  }
  return "";
}

}  // namespace reldp::engine
