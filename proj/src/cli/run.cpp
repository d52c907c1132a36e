#include "reldp/cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>

#include "reldp/decomp/tree_decomposition.hpp"
#include "reldp/error.hpp"
#include "reldp/instance/cnf.hpp"
#include "reldp/instance/dimacs.hpp"

namespace reldp::cli {

namespace {

using Clock = std::chrono::steady_clock;

problems::Instance load(problems::Problem p, const std::string& path, std::ostream& err) {
  const std::string text = read_file(path);
  Warnings warnings;
  problems::Instance instance;
  switch (p) {
    case problems::Problem::sharpsat:
      instance = parse_dimacs_cnf(text, &warnings);
      break;
    case problems::Problem::maxsat:
      instance = parse_wdimacs(text, &warnings);
      break;
    default:
      instance = parse_dimacs_graph(text, &warnings);
  }
  for (const auto& w : warnings) err << "warning: " << path << ": " << w << '\n';
  return instance;
}

TreeDecomposition obtain_td(const RunConfig& config, const Graph& g, std::ostream& err) {
  if (!config.td) return normalize_root(limit_children(decompose(g, config.seed), config.child_limit));
  Warnings warnings;
  const auto td = read_td(read_file(*config.td), &warnings);
  for (const auto& w : warnings) err << "warning: " << *config.td << ": " << w << '\n';
  if (const auto v = validate(td, g)) throw ValidationError(*config.td + ": " + v->message);
  return normalize_root(td);
}

void write_stats(const RunConfig& config, const engine::Solution& s, double seconds) {
  const nlohmann::json j = {
      {"problem", problems::to_string(config.problem)},
      {"width", s.stats.width},
      {"nodeCount", s.stats.node_count},
      {"maxTableRows", s.stats.max_table_rows},
      {"wallSeconds", seconds},
      {"workers", s.stats.workers},
      {"seed", config.seed},
      {"solution", s.line()},
  };
  std::ofstream f(*config.stats_json);
  if (!f) throw Error("cannot write " + *config.stats_json);
  f << j.dump(2) << '\n';
}

template <class E>
std::map<std::string, E> names(std::initializer_list<E> values, std::string (*to_str)(E)) {
  std::map<std::string, E> m;
  for (E v : values) m.emplace(to_str(v), v);
  return m;
}

void add_common(CLI::App& app, RunConfig& config) {
  using problems::Problem;
  app.add_option("--problem", config.problem, "sharpsat, col, vc, maxsat or ids")
      ->required()
      ->transform(CLI::CheckedTransformer(
          names({Problem::sharpsat, Problem::col, Problem::vc, Problem::maxsat, Problem::ids},
                &problems::to_string)));
  app.add_option("--input", config.input, "DIMACS cnf, wcnf or graph file")->required()->check(CLI::ExistingFile);
  app.add_option("--seed", config.seed, "seed for decomposition tie-breaking");
  app.add_option("--child-limit", config.child_limit, "maximum children per decomposition node")
      ->check(CLI::Range(2, 1 << 20));
}

}  // namespace

void check(const RunConfig& config) {
  const bool col = config.problem == problems::Problem::col;
  if (col && !config.colors) throw std::invalid_argument("--colors is required for col");
  if (!col && config.colors) throw std::invalid_argument("--colors only applies to col");
  if (col && *config.colors < 1) throw std::invalid_argument("--colors must be at least 1");
  if (config.workers < 1) throw std::invalid_argument("--workers must be at least 1");
  if (config.child_limit < 2) throw std::invalid_argument("--child-limit must be at least 2");
}

int solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  try {
    check(config);
    const auto instance = load(config.problem, config.input, err);
    const auto bundle = problems::make_bundle(config.problem, instance,
                                              {config.colors.value_or(0), config.free_vars});
    const auto td = obtain_td(config, bundle->graph(), err);

    engine::DpConfig dp;
    dp.workers = config.workers;
    dp.row_cap = config.row_cap;
    dp.full_bags = config.debug;
    dp.trace = config.debug;
    const auto result = engine::run_dp(td, *bundle, dp);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();

    if (config.debug) engine::write_trace(out, result.trace);
    out << result.solution.line() << '\n';
    out.flush();
    if (config.stats_json) write_stats(config, result.solution, seconds);
    return result.solution.kind == engine::SolutionKind::unsat ? kUnsat : kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "error: invalid decomposition: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dynamic programming on tree decompositions", "reldp"};
  app.require_subcommand(1);

  RunConfig config;
  std::string free_vars = "count";
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance and print the solution line");
  add_common(*solve_cmd, config);
  solve_cmd->add_option("--colors", config.colors, "number of colors (col only)");
  solve_cmd->add_option("--td", config.td, "PACE tree decomposition to use instead of the heuristic")
      ->check(CLI::ExistingFile);
  solve_cmd->add_option("--workers", config.workers, "worker threads");
  solve_cmd->add_option("--row-cap", config.row_cap, "maximum rows per table");
  solve_cmd->add_option("--free-vars", free_vars, "count or ignore variables outside all clauses")
      ->check(CLI::IsMember({"count", "ignore"}));
  solve_cmd->add_flag("--debug", config.debug, "print every node table before the solution");
  solve_cmd->add_option("--stats-json", config.stats_json, "write run statistics to this file");

  auto* decompose_cmd = app.add_subcommand("decompose", "print the heuristic tree decomposition in PACE format");
  add_common(*decompose_cmd, config);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kInputError;
  }
  config.free_vars = free_vars == "ignore" ? problems::FreeVars::ignore : problems::FreeVars::count;

  if (decompose_cmd->parsed()) {
    try {
      const auto instance = load(config.problem, config.input, err);
      const auto bundle = problems::make_bundle(config.problem, instance, {1, config.free_vars});
      out << write_td(normalize_root(limit_children(decompose(bundle->graph(), config.seed), config.child_limit)));
      return kOk;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }
  return solve(config, out, err);
}

}  // namespace reldp::cli
