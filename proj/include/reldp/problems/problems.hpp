#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "reldp/engine/bundle.hpp"
#include "reldp/instance/cnf.hpp"
#include "reldp/instance/graph.hpp"

namespace reldp::problems {

enum class Problem { sharpsat, col, vc, maxsat, ids };

std::string to_string(Problem p);
std::optional<Problem> parse_problem(std::string_view name);

/// How #SAT treats declared variables that occur in no clause.
enum class FreeVars { count, ignore };

using Instance = std::variant<CnfFormula, PartialMaxSatInstance, Graph>;

struct BundleOptions {
  int colors = 0;  // #o-COL only
  FreeVars free_vars = FreeVars::count;
};

std::unique_ptr<engine::ProblemBundle> sharpsat_bundle(CnfFormula f, FreeVars free_vars = FreeVars::count);
/// Colors are 0..colors-1; requires colors >= 1.
std::unique_ptr<engine::ProblemBundle> col_bundle(Graph g, int colors);
std::unique_ptr<engine::ProblemBundle> vc_bundle(Graph g);
std::unique_ptr<engine::ProblemBundle> maxsat_bundle(PartialMaxSatInstance inst);
std::unique_ptr<engine::ProblemBundle> ids_bundle(Graph g);

/// Throws std::invalid_argument when the instance kind does not fit the problem.
std::unique_ptr<engine::ProblemBundle> make_bundle(Problem p, const Instance& instance, const BundleOptions& options);

/// Instances above this many variables or vertices are refused by the oracles.
inline constexpr int kOracleMaxSize = 20;

// Exhaustive enumeration; OracleLimitError above the size guard.
engine::Solution oracle_sharpsat(const CnfFormula& f, FreeVars free_vars = FreeVars::count);
engine::Solution oracle_col(const Graph& g, int colors);
engine::Solution oracle_vc(const Graph& g);
engine::Solution oracle_maxsat(const PartialMaxSatInstance& inst);
engine::Solution oracle_ids(const Graph& g);

engine::Solution oracle(Problem p, const Instance& instance, const BundleOptions& options);

}  // namespace reldp::problems
