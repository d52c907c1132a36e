#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reldp/instance/cnf.hpp"
#include "reldp/instance/graph.hpp"

namespace reldp {

/// Non-fatal parser findings (e.g. a clause count that disagrees with the
/// header). Passing nullptr drops them.
using Warnings = std::vector<std::string>;

/// `p cnf <vars> <clauses>` followed by 0-terminated clauses. Comment lines
/// start with `c`; a line starting with `%` ends the input.
CnfFormula parse_dimacs_cnf(std::string_view text, Warnings* warnings = nullptr);

/// `p wcnf <vars> <clauses> <top>`; weight `top` marks a hard clause, weight 1
/// a soft one. Any other weight is rejected.
PartialMaxSatInstance parse_wdimacs(std::string_view text, Warnings* warnings = nullptr);

/// `p edge|tw|col <n> <m>` followed by `e u v` or bare `u v` lines.
Graph parse_dimacs_graph(std::string_view text, Warnings* warnings = nullptr);

std::string write_dimacs_cnf(const CnfFormula& f);
std::string write_wdimacs(const PartialMaxSatInstance& inst);
std::string write_dimacs_graph(const Graph& g);

/// Whole-file read; throws ParseError when the file cannot be opened.
std::string read_file(const std::string& path);

}  // namespace reldp
