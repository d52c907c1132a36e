#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reldp/engine/dp.hpp"
#include "reldp/problems/problems.hpp"

namespace reldp::cli {

enum ExitCode : int { kOk = 0, kUnsat = 1, kInputError = 2, kCapacityError = 3, kInternalError = 4 };

struct RunConfig {
  problems::Problem problem = problems::Problem::sharpsat;
  std::optional<int> colors;
  std::string input;
  std::optional<std::string> td;
  std::uint64_t seed = 1;
  int workers = engine::default_workers();
  int child_limit = 5;
  std::size_t row_cap = engine::kDefaultRowCap;
  problems::FreeVars free_vars = problems::FreeVars::count;
  bool debug = false;
  std::optional<std::string> stats_json;
};

/// Throws std::invalid_argument when colors or workers are inconsistent.
void check(const RunConfig& config);

/// Parses, decomposes, solves and reports. Returns an ExitCode.
int solve(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line without the program name, e.g. {"solve", "--problem", "vc", ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reldp::cli
