#include <stdexcept>

#include "reldp/problems/problems.hpp"

namespace reldp::problems {

std::string to_string(Problem p) {
  switch (p) {
    case Problem::sharpsat: return "sharpsat";
    case Problem::col: return "col";
    case Problem::vc: return "vc";
    case Problem::maxsat: return "maxsat";
    case Problem::ids: return "ids";
  }
  return "?";
}

std::optional<Problem> parse_problem(std::string_view name) {
  for (auto p : {Problem::sharpsat, Problem::col, Problem::vc, Problem::maxsat, Problem::ids})
    if (name == to_string(p)) return p;
  return std::nullopt;
}

namespace {

template <typename T>
const T& expect(Problem p, const Instance& instance) {
  if (const auto* x = std::get_if<T>(&instance)) return *x;
  throw std::invalid_argument("instance kind does not match problem " + to_string(p));
}

}  // namespace

std::unique_ptr<engine::ProblemBundle> make_bundle(Problem p, const Instance& instance, const BundleOptions& options) {
  switch (p) {
    case Problem::sharpsat: return sharpsat_bundle(expect<CnfFormula>(p, instance), options.free_vars);
    case Problem::col: return col_bundle(expect<Graph>(p, instance), options.colors);
    case Problem::vc: return vc_bundle(expect<Graph>(p, instance));
    case Problem::maxsat: return maxsat_bundle(expect<PartialMaxSatInstance>(p, instance));
    case Problem::ids: return ids_bundle(expect<Graph>(p, instance));
  }
  throw std::invalid_argument("unknown problem");
}

engine::Solution oracle(Problem p, const Instance& instance, const BundleOptions& options) {
  switch (p) {
    case Problem::sharpsat: return oracle_sharpsat(expect<CnfFormula>(p, instance), options.free_vars);
    case Problem::col: return oracle_col(expect<Graph>(p, instance), options.colors);
    case Problem::vc: return oracle_vc(expect<Graph>(p, instance));
    case Problem::maxsat: return oracle_maxsat(expect<PartialMaxSatInstance>(p, instance));
    case Problem::ids: return oracle_ids(expect<Graph>(p, instance));
  }
  throw std::invalid_argument("unknown problem");
}

}  // namespace reldp::problems
