// Acceptance checks; prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "reldp/cli/cli.hpp"
#include "reldp/decomp/tree_decomposition.hpp"
#include "reldp/engine/dp.hpp"
#include "reldp/error.hpp"
#include "reldp/instance/dimacs.hpp"
#include "reldp/problems/problems.hpp"
#include "reldp/relalg/ops.hpp"
#include "support.hpp"

using namespace reldp;
using problems::Problem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kTraceSeconds = 1.0;
constexpr double kOracleSeconds = 300.0;
constexpr double kScaleSeconds = 60.0;
constexpr int kOracleCnfs = 500;
constexpr int kOracleGraphs = 500;
constexpr int kOracleMaxSat = 200;
constexpr int kDeterminismInstances = 50;
constexpr int kRandomTrees = 100;
constexpr int kScaleVars = 2000;
constexpr int kScaleBlock = 21;
constexpr int kScaleOverlap = 8;
constexpr int kScaleClausesPerBlock = 60;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void report(int n, const std::string& title, Verdict v, const std::string& summary) {
  if (!v.ok) ++failures;
  std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << n << " (" << title << "): "
            << (v.ok ? summary : v.detail) << std::endl;
}

template <class F>
void guarded(int n, const std::string& title, F body) {
  try {
    body();
  } catch (const std::exception& e) {
    Verdict v;
    v.require(false, std::string("exception: ") + e.what());
    report(n, title, v, "");
  }
}

engine::Solution solve(const engine::ProblemBundle& b, std::uint64_t seed, engine::DpConfig config = {}) {
  return engine::run_dp(normalize_root(limit_children(decompose(b.graph(), seed), 5)), b, config).solution;
}

// Rows of one node block in a trace dump.
std::set<std::string> trace_rows(const std::string& dump, int id) {
  std::istringstream in(dump);
  std::string line;
  std::set<std::string> rows;
  bool inside = false;
  const std::string header = "node " + std::to_string(id) + " ";
  while (std::getline(in, line)) {
    if (line.rfind("node ", 0) == 0) inside = line.rfind(header, 0) == 0;
    if (inside && line.rfind("  | ", 0) == 0) rows.insert(line.substr(4));
  }
  return rows;
}

void criterion1() {
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"solve", "--problem", "sharpsat", "--input", testing::data_path("ex2.cnf"), "--td",
                             testing::data_path("example_nice.td"), "--debug"},
                            out, err);
  const double seconds = since(start);
  const auto dump = out.str();
  Verdict v;
  v.require(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
  v.require(trace_rows(dump, 6) == std::set<std::string>{"0 3", "1 3"}, "tau6 differs");
  v.require(trace_rows(dump, 10) == std::set<std::string>{"1 2"}, "tau10 differs");
  v.require(trace_rows(dump, 12) == std::set<std::string>{"6"}, "tau12 differs");
  v.require(dump.size() >= 4 && dump.substr(dump.size() - 4) == "s 6\n", "last line is not s 6");
  v.require(seconds < kTraceSeconds, "took " + std::to_string(seconds) + " s");
  report(1, "running example trace", v, "tau6, tau10, tau12 and count 6 in " + std::to_string(seconds) + " s");
}

void criterion2() {
  using namespace relalg;
  using testing::table;
  const auto tau1 = table({bool_column("a"), bool_column("b")}, {{1, 1}, {0, 0}, {0, 1}});
  Verdict v;
  v.require(same_rows(select(tau1, Formula::holds("b")), table({bool_column("a"), bool_column("b")}, {{1, 1}, {0, 1}})),
            "selection");
  const auto tau2 = rename(tau1, {{"a", "b"}, {"b", "a"}});
  const auto tau3 = theta_join(tau1, rename(tau2, {{"a", "a'"}, {"b", "b'"}}),
                               Formula::equals_column("a", "a'") && Formula::equals_column("b", "b'"));
  v.require(same_rows(tau3, table({bool_column("a"), bool_column("a'"), bool_column("b"), bool_column("b'")},
                                  {{0, 0, 0, 0}, {1, 1, 1, 1}})),
            "theta join");
  const auto ext =
      extended_project(tau1, {"a"}, {{bounded_column("c", 0, 2), ValueExpr::column("a") + ValueExpr::column("b")}});
  v.require(same_rows(ext, table({bool_column("a"), bounded_column("c", 0, 2)}, {{1, 2}, {0, 0}, {0, 1}})),
            "extended projection");
  const auto grouped = group_aggregate(tau1, {"a"}, {{counter_column("d"), {AggregateKind::sum, ValueExpr::column("b")}}});
  v.require(same_rows(grouped, table({bool_column("a"), counter_column("d")}, {{1, 1}, {0, 1}})), "grouping");
  report(2, "relational algebra examples", v, "selection, theta join, extended projection, grouping");
}

void criterion3() {
  const auto start = Clock::now();
  testing::Rng rng(2024);
  Verdict v;
  int runs = 0;
  auto compare = [&](Problem p, const problems::Instance& inst, problems::BundleOptions options) {
    const auto expected = problems::oracle(p, inst, options);
    const auto b = problems::make_bundle(p, inst, options);
    for (std::uint64_t seed : {rng(), rng()}) {
      const auto got = solve(*b, seed);
      ++runs;
      v.require(got.same_answer(expected), problems::to_string(p) + ": " + got.line() + " vs oracle " + expected.line());
    }
  };
  for (int i = 0; i < kOracleCnfs; ++i) {
    const int n = testing::uniform(rng, 1, 12);
    compare(Problem::sharpsat, testing::random_cnf(rng, n, testing::uniform(rng, 0, 30), 3), {});
  }
  for (int i = 0; i < kOracleGraphs; ++i) {
    const auto g = testing::random_graph(rng, testing::uniform(rng, 1, 10), testing::uniform(rng, 1, 6) / 10.0);
    compare(Problem::col, g, {testing::uniform(rng, 2, 3), problems::FreeVars::count});
    compare(Problem::vc, g, {});
    compare(Problem::ids, g, {});
  }
  for (int i = 0; i < kOracleMaxSat; ++i) {
    const int n = testing::uniform(rng, 1, 10);
    PartialMaxSatInstance inst{testing::random_cnf(rng, n, testing::uniform(rng, 0, 2 * n), 3), {}};
    for (int k = testing::uniform(rng, 0, 3 * n); k > 0; --k) inst.soft.push_back(testing::random_clause(rng, n, 3));
    compare(Problem::maxsat, inst, {});
  }
  const double seconds = since(start);
  v.require(seconds < kOracleSeconds, "took " + std::to_string(seconds) + " s");
  report(3, "oracle equivalence", v, std::to_string(runs) + " runs agree in " + std::to_string(seconds) + " s");
}

void criterion4() {
  testing::Rng rng(77);
  const int many = std::max(engine::default_workers(), 4);
  const std::vector<Problem> all = {Problem::sharpsat, Problem::col, Problem::vc, Problem::maxsat, Problem::ids};
  Verdict v;
  for (int i = 0; i < kDeterminismInstances; ++i) {
    const Problem p = all[i % all.size()];
    const int n = testing::uniform(rng, 4, 14);
    problems::Instance inst;
    problems::BundleOptions options;
    if (p == Problem::sharpsat) {
      inst = testing::random_cnf(rng, n, 2 * n, 3);
    } else if (p == Problem::maxsat) {
      PartialMaxSatInstance m{testing::random_cnf(rng, n, n / 2, 3), {}};
      for (int k = 0; k < 2 * n; ++k) m.soft.push_back(testing::random_clause(rng, n, 3));
      inst = m;
    } else {
      inst = testing::random_graph(rng, n, 0.3);
      if (p == Problem::col) options.colors = 3;
    }
    const auto b = problems::make_bundle(p, inst, options);
    const auto td = normalize_root(limit_children(decompose(b->graph(), rng()), 3));
    engine::DpConfig config;
    config.trace = true;
    config.workers = 1;
    const auto one = engine::run_dp(td, *b, config);
    config.workers = many;
    const auto par = engine::run_dp(td, *b, config);
    v.require(one.solution.same_answer(par.solution), "solutions differ on instance " + std::to_string(i));
    v.require(one.trace.size() == par.trace.size(), "trace sizes differ");
    for (std::size_t k = 0; k < std::min(one.trace.size(), par.trace.size()); ++k)
      v.require(relalg::same_rows(one.trace[k].table, par.trace[k].table),
                "node " + std::to_string(one.trace[k].id) + " differs on instance " + std::to_string(i));
  }
  report(4, "determinism", v,
         std::to_string(kDeterminismInstances) + " instances identical with 1 and " + std::to_string(many) + " workers");
}

void criterion5() {
  testing::Rng rng(5);
  Verdict v;
  const auto example = parse_dimacs_graph(read_file(testing::data_path("example.gr")));
  const auto td = decompose(example, 1);
  v.require(!validate(td, example) && td.width() == 2, "example graph width " + std::to_string(td.width()));
  for (int i = 0; i < kRandomTrees; ++i) {
    const int n = testing::uniform(rng, 2, 60);
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 1);
    std::shuffle(label.begin(), label.end(), rng);
    Graph tree(n);
    for (int u = 1; u < n; ++u) tree.add_edge(label[u], label[testing::uniform(rng, 0, u - 1)]);
    const auto t = decompose(tree, rng());
    v.require(!validate(t, tree) && t.width() == 1, "tree " + std::to_string(i) + " width " + std::to_string(t.width()));
  }
  for (int i = 0; i < kRandomTrees; ++i) {
    const int k = testing::uniform(rng, 2, 6);
    const int n = testing::uniform(rng, k, 40);
    auto g = testing::random_graph(rng, n, 0.08);
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    std::shuffle(vs.begin(), vs.end(), rng);
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) g.add_edge(vs[a], vs[b]);
    const auto t = decompose(g, rng());
    v.require(!validate(t, g) && t.width() >= k - 1,
              "planted " + std::to_string(k) + "-clique width " + std::to_string(t.width()));
  }
  report(5, "decomposition quality", v, "example graph width 2, trees width 1, planted cliques bounded below");
}

// Chain of cliques over 1..kScaleVars; consecutive blocks share kScaleOverlap variables.
struct ScaleInstance {
  CnfFormula formula;
  std::vector<std::pair<int, int>> blocks;
  std::vector<std::vector<Clause>> block_clauses;
};

ScaleInstance scale_instance(testing::Rng& rng) {
  ScaleInstance s;
  s.formula.num_vars = kScaleVars;
  std::vector<bool> planted(kScaleVars + 1);
  for (int x = 1; x <= kScaleVars; ++x) planted[x] = testing::coin(rng, 0.5);
  auto satisfied_by_plant = [&](Clause& c) {
    const bool sat = std::any_of(c.begin(), c.end(), [&](int l) { return planted[std::abs(l)] == (l > 0); });
    if (!sat) c[testing::uniform(rng, 0, static_cast<int>(c.size()) - 1)] *= -1;
    normalize_clause(c);
  };
  for (int lo = 1;; lo += kScaleBlock - kScaleOverlap) {
    const int hi = std::min(lo + kScaleBlock - 1, kScaleVars);
    s.blocks.emplace_back(lo, hi);
    std::vector<Clause> clauses;
    Clause wide;
    for (int x = lo; x <= hi; ++x) wide.push_back(testing::coin(rng, 0.5) ? x : -x);
    satisfied_by_plant(wide);
    clauses.push_back(wide);
    for (int k = 0; k < kScaleClausesPerBlock; ++k) {
      std::vector<int> vars(hi - lo + 1);
      std::iota(vars.begin(), vars.end(), lo);
      std::shuffle(vars.begin(), vars.end(), rng);
      Clause c;
      for (int j = 0; j < 4; ++j) c.push_back(testing::coin(rng, 0.5) ? vars[j] : -vars[j]);
      satisfied_by_plant(c);
      clauses.push_back(c);
    }
    for (const auto& c : clauses) s.formula.clauses.push_back(c);
    s.block_clauses.push_back(std::move(clauses));
    if (hi == kScaleVars) break;
  }
  return s;
}

// Transfer over separators; each block is enumerated depth-first with clause pruning.
BigInt scale_oracle(const ScaleInstance& s) {
  std::vector<BigInt> incoming{1};
  int left = 0;
  for (std::size_t b = 0; b < s.blocks.size(); ++b) {
    const auto [lo, hi] = s.blocks[b];
    const int size = hi - lo + 1;
    const int right = b + 1 < s.blocks.size() ? hi - s.blocks[b + 1].first + 1 : 0;
    std::vector<std::vector<const Clause*>> closing(size);
    for (const auto& c : s.block_clauses[b]) closing[std::abs(c.back()) - lo].push_back(&c);
    std::vector<BigInt> outgoing(std::size_t{1} << right);
    std::vector<int> value(size);
    std::function<void(int)> dfs = [&](int i) {
      if (i == left) {
        std::size_t key = 0;
        for (int j = 0; j < left; ++j) key = key << 1 | value[j];
        if (incoming[key] == 0) return;
      }
      if (i == size) {
        std::size_t lkey = 0, rkey = 0;
        for (int j = 0; j < left; ++j) lkey = lkey << 1 | value[j];
        for (int j = size - right; j < size; ++j) rkey = rkey << 1 | value[j];
        outgoing[rkey] += incoming[lkey];
        return;
      }
      for (int bit = 0; bit < 2; ++bit) {
        value[i] = bit;
        const bool ok = std::all_of(closing[i].begin(), closing[i].end(), [&](const Clause* c) {
          return std::any_of(c->begin(), c->end(), [&](int l) { return value[std::abs(l) - lo] == (l > 0); });
        });
        if (ok) dfs(i + 1);
      }
    };
    dfs(0);
    incoming = std::move(outgoing);
    left = right;
  }
  return incoming[0];
}

void criterion6() {
  testing::Rng rng(6);
  const auto inst = scale_instance(rng);
  const auto expected = scale_oracle(inst);
  const auto start = Clock::now();
  const auto b = problems::sharpsat_bundle(inst.formula);
  const auto td = normalize_root(limit_children(decompose(b->graph(), 1), 5));
  const auto got = engine::run_dp(td, *b).solution;
  const double seconds = since(start);
  Verdict v;
  v.require(td.width() <= kScaleBlock - 1, "width " + std::to_string(td.width()));
  v.require(got.kind == engine::SolutionKind::count && got.value == expected,
            "count " + got.line() + " vs oracle " + expected.get_str());
  v.require(got.stats.max_table_rows <= engine::kDefaultRowCap, "row cap exceeded");
  v.require(seconds < kScaleSeconds, "took " + std::to_string(seconds) + " s");
  report(6, "structural scale", v,
         std::to_string(kScaleVars) + " vars, " + std::to_string(inst.formula.clauses.size()) + " clauses, width " +
             std::to_string(td.width()) + ", " + std::to_string(td.size()) + " nodes, max rows " +
             std::to_string(got.stats.max_table_rows) + ", exact count (" + std::to_string(expected.get_str().size()) +
             " digits) in " + std::to_string(seconds) + " s");
}

void criterion7() {
  Verdict v;
  testing::Rng rng(7);
  auto round_trip = [&](const TreeDecomposition& td, const std::string& name) {
    const auto text = write_td(td);
    const auto back = read_td(text);
    v.require(back == td && write_td(back) == text, "round trip of " + name);
  };
  round_trip(read_td(read_file(testing::data_path("example_nice.td"))), "example_nice.td");
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_graph(rng, testing::uniform(rng, 1, 30), 0.15);
    round_trip(limit_children(decompose(g, rng()), testing::uniform(rng, 2, 4)), "random decomposition");
  }
  const auto bytes = read_file(testing::data_path("ex2.cnf"));
  Warnings warnings;
  const auto f = parse_dimacs_cnf(bytes, &warnings);
  v.require(f == CnfFormula{4, {{-1, 2, 3}, {1, -2, -3}, {1, 4}, {1, -4}}} && warnings.empty(), "ex2.cnf parse");
  std::ostringstream out, err;
  const int code = cli::run({"solve", "--problem", "maxsat", "--input", testing::data_path("bad_weight.wcnf")}, out, err);
  v.require(code == 2, "weight-5 soft clause exit " + std::to_string(code));
  report(7, "format conformance", v, "PACE round trip, ex2.cnf accepted, weighted soft clause exit 2");
}

}  // namespace

int main() {
  guarded(1, "running example trace", criterion1);
  guarded(2, "relational algebra examples", criterion2);
  guarded(3, "oracle equivalence", criterion3);
  guarded(4, "determinism", criterion4);
  guarded(5, "decomposition quality", criterion5);
  guarded(6, "structural scale", criterion6);
  guarded(7, "format conformance", criterion7);
  return failures == 0 ? 0 : 1;
}
