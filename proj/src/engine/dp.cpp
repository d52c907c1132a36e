#include "reldp/engine/dp.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "reldp/error.hpp"

namespace reldp::engine {

using relalg::Formula;
using relalg::Table;

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 24u));
}

namespace {

bool mentions_only_vertices(const Formula& f) {
  for (const auto& c : f.columns())
    if (!parse_vertex_column(c)) return false;
  return true;
}

using NameSet = std::set<std::string>;

NameSet names_of(const Table& t) {
  NameSet out;
  for (const auto& c : t.columns()) out.insert(c.name);
  return out;
}

NameSet names_of(const Table& a, const Table& b) {
  NameSet out = names_of(a);
  for (const auto& c : b.columns()) out.insert(c.name);
  return out;
}

bool columns_present(const Formula& f, const NameSet& names) {
  for (const auto& c : f.columns())
    if (!names.count(c)) return false;
  return true;
}

// Conjuncts of intrFilter that may be applied before the node's columns are
// complete, handed out once each.
class Pushdown {
 public:
  Pushdown(const Formula& filter, bool enabled) {
    for (auto& c : filter.conjuncts()) (enabled && mentions_only_vertices(c) ? early_ : late_).push_back(c);
    taken_.assign(early_.size(), 0);
  }

  Formula take_applicable(const NameSet& names) {
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < early_.size(); ++i)
      if (!taken_[i] && columns_present(early_[i], names)) {
        taken_[i] = 1;
        parts.push_back(early_[i]);
      }
    return Formula::all_of(std::move(parts));
  }

  Formula take_rest() {
    std::vector<Formula> parts = late_;
    for (std::size_t i = 0; i < early_.size(); ++i)
      if (!taken_[i]) parts.push_back(early_[i]);
    std::fill(taken_.begin(), taken_.end(), 1);
    late_.clear();
    return Formula::all_of(std::move(parts));
  }

 private:
  std::vector<Formula> early_, late_;
  std::vector<char> taken_;
};

Table select_unless_trivial(Table t, const Formula& f) {
  if (f.is_truth()) return t;
  return relalg::select(t, f);
}

struct NodeOutcome {
  Table table;
  std::size_t peak_rows = 0;
};

Table join_children(const NodeContext& node, const std::vector<const Table*>& children, const ProblemBundle& bundle,
                    const DpConfig& config, Pushdown& pushdown, std::size_t& peak) {
  Table current;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < children.size(); ++i) {
    const Table& child = *children[i];
    std::map<std::string, std::string> mapping;
    std::vector<Formula> parts;
    for (const auto& col : child.columns()) {
      if (parse_vertex_column(col.name) && seen.insert(col.name).second) {
        mapping[col.name] = col.name;
      } else {
        mapping[col.name] = child_column(col.name, i);
        if (parse_vertex_column(col.name)) parts.push_back(Formula::equals_column(col.name, mapping[col.name]));
      }
    }
    Table renamed = relalg::rename(child, mapping);
    const bool last = i + 1 == children.size();
    if (i == 0) {
      current = std::move(renamed);
      Formula f = pushdown.take_applicable(names_of(current));
      if (last) f = f && bundle.join_add_filter(node);
      current = select_unless_trivial(std::move(current), f);
    } else {
      parts.push_back(pushdown.take_applicable(names_of(current, renamed)));
      if (last) parts.push_back(bundle.join_add_filter(node));
      current = relalg::theta_join(current, renamed, Formula::all_of(std::move(parts)), config.row_cap);
    }
    peak = std::max(peak, current.size());
  }
  return current;
}

std::vector<std::string> names_without(const Table& t, const std::set<std::string>& drop, bool drop_child_columns) {
  std::vector<std::string> keep;
  for (const auto& c : t.columns()) {
    if (drop.count(c.name)) continue;
    if (drop_child_columns && c.name.find('@') != std::string::npos) continue;
    keep.push_back(c.name);
  }
  return keep;
}

Table apply_assignments(const Table& t, const std::vector<relalg::Assignment>& assignments, bool drop_child_columns) {
  if (assignments.empty() && !drop_child_columns) return t;
  std::set<std::string> targets;
  for (const auto& a : assignments) targets.insert(a.target.name);
  return relalg::extended_project(t, names_without(t, targets, drop_child_columns), assignments);
}

NodeOutcome build(const NodeContext& node, const std::vector<const Table*>& children, const ProblemBundle& bundle,
                  const DpConfig& config, const LocalInstance& local, NodeTrace* trace) {
  NodeOutcome out;
  std::size_t& peak = out.peak_rows;
  Pushdown pushdown(bundle.intr_filter(node, local), config.pushdown);

  // (1) join children or start from the leaf table
  Table current = children.empty() ? bundle.leaf_table(node)
                                   : join_children(node, children, bundle, config, pushdown, peak);

  // (2) introduced vertices
  for (int v : node.introduced) {
    Table intro = bundle.intr_table(v, node);
    if (!intro.has_column(vertex_column(v)))
      throw SchemaError("introduce table for vertex " + std::to_string(v) + " lacks column " + vertex_column(v));
    current = relalg::theta_join(current, intro, pushdown.take_applicable(names_of(current, intro)), config.row_cap);
    peak = std::max(peak, current.size());
  }

  // (3) joinAddCols, then intrAddCols
  if (!children.empty()) current = apply_assignments(current, bundle.join_add_cols(node), true);
  current = apply_assignments(current, bundle.intr_add_cols(node, local), false);

  // (4), (5) filters
  const Formula intr = pushdown.take_rest();
  const Formula rem = bundle.rem_filter(node);
  if (config.rem_filter_first) {
    current = select_unless_trivial(std::move(current), rem);
    current = select_unless_trivial(std::move(current), intr);
  } else {
    current = select_unless_trivial(std::move(current), intr);
    current = select_unless_trivial(std::move(current), rem);
  }
  const std::size_t candidates = current.size();
  peak = std::max(peak, candidates);

  // (6) grouping over the kept scope
  std::vector<std::string> group_by;
  for (int v : node.kept) group_by.push_back(vertex_column(v));
  for (auto& c : bundle.rem_group_cols(node)) group_by.push_back(std::move(c));
  const auto aggregates = bundle.rem_aggr(node, local);
  const std::set<std::string> grouped(group_by.begin(), group_by.end());
  std::set<std::string> disposable;
  for (int v : node.removed) {
    disposable.insert(vertex_column(v));
    for (auto& c : bundle.rem_cols(v)) {
      if (grouped.count(c)) throw SchemaError("column '" + c + "' is both removed and grouped");
      disposable.insert(std::move(c));
    }
  }
  for (const auto& a : aggregates) disposable.insert(a.target.name);
  for (const auto& c : current.columns())
    if (!grouped.count(c.name) && !disposable.count(c.name))
      throw SchemaError("node " + std::to_string(node.id) + ": column '" + c.name +
                        "' is neither grouped, removed nor aggregated");
  current = relalg::group_aggregate(current, group_by, aggregates);
  current = select_unless_trivial(std::move(current), bundle.group_filter(node));
  peak = std::max(peak, current.size());

  std::vector<relalg::Column> expected;
  for (int v : node.kept) expected.push_back(current.columns().at(current.index_of(vertex_column(v))));
  for (auto& c : bundle.aux_columns(node)) expected.push_back(std::move(c));
  auto by_name = [](const relalg::Column& a, const relalg::Column& b) { return a.name < b.name; };
  auto actual = current.columns();
  std::sort(expected.begin(), expected.end(), by_name);
  std::sort(actual.begin(), actual.end(), by_name);
  if (actual != expected) throw SchemaError("node " + std::to_string(node.id) + ": output columns differ from bundle schema");

  if (trace) {
    trace->id = node.id;
    trace->bag = node.bag;
    trace->kept = node.kept;
    trace->local = local.describe();
    trace->input_rows = 0;
    for (const auto* c : children) trace->input_rows += c->size();
    trace->candidate_rows = candidates;
    trace->table = current;
    trace->table.sort_canonical();
  }
  out.table = std::move(current);
  return out;
}

NodeOutcome build_with_context(const NodeContext& node, const std::vector<const Table*>& children,
                               const ProblemBundle& bundle, const DpConfig& config, NodeTrace* trace) {
  const auto local = bundle.local_instance(node);
  try {
    return build(node, children, bundle, config, local, trace);
  } catch (const CapacityError& e) {
    throw CapacityError("node " + std::to_string(node.id) + ": " + e.what());
  }
}

}  // namespace

Table compute_node_table(const NodeContext& node, const std::vector<const Table*>& children,
                         const ProblemBundle& bundle, const DpConfig& config, NodeTrace* trace) {
  return build_with_context(node, children, bundle, config, trace).table;
}

DpResult run_dp(const TreeDecomposition& td, const ProblemBundle& bundle, const DpConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (auto violation = validate(td, bundle.graph())) throw ValidationError(violation->message);
  if (!td.node(td.root()).bag.empty()) throw ValidationError("root bag must be empty");
  if (config.row_cap == 0) throw std::invalid_argument("row cap must be positive");

  const auto contexts = make_contexts(td, config.full_bags);
  const std::size_t n = td.size();
  const int workers = std::max(1, std::min<int>(config.workers > 0 ? config.workers : default_workers(),
                                                static_cast<int>(n)));

  std::vector<std::unique_ptr<Table>> tables(n);
  std::vector<NodeTrace> traces(config.trace ? n : 0);
  std::vector<std::size_t> peaks(n, 0);
  std::vector<int> pending(n);
  std::deque<int> ready;
  for (int i : td.post_order()) {
    pending[i] = static_cast<int>(td.node(i).children.size());
    if (pending[i] == 0) ready.push_back(i);
  }

  std::mutex mutex;
  std::condition_variable cv;
  std::size_t done = 0;
  std::exception_ptr error;

  auto work = [&] {
    for (;;) {
      int index = -1;
      std::vector<const Table*> inputs;
      {
        std::unique_lock lock(mutex);
        cv.wait(lock, [&] { return error || done == n || !ready.empty(); });
        if (error || done == n) return;
        index = ready.front();
        ready.pop_front();
        for (int c : td.node(index).children) inputs.push_back(tables[c].get());
      }
      try {
        auto outcome = build_with_context(contexts[index], inputs, bundle, config,
                                          config.trace ? &traces[index] : nullptr);
        std::lock_guard lock(mutex);
        tables[index] = std::make_unique<Table>(std::move(outcome.table));
        peaks[index] = outcome.peak_rows;
        ++done;
        if (!config.trace)
          for (int c : td.node(index).children) tables[c].reset();
        const int parent = td.node(index).parent;
        if (parent >= 0 && --pending[parent] == 0) ready.push_back(parent);
        cv.notify_all();
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        cv.notify_all();
        return;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  DpResult result;
  result.solution = bundle.finalize(*tables[td.root()]);
  auto& stats = result.solution.stats;
  stats.width = td.width();
  stats.node_count = n;
  stats.max_table_rows = *std::max_element(peaks.begin(), peaks.end());
  stats.workers = workers;
  stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (config.trace) {
    std::sort(traces.begin(), traces.end(), [](const NodeTrace& a, const NodeTrace& b) { return a.id < b.id; });
    result.trace = std::move(traces);
  }
  return result;
}

void write_trace(std::ostream& out, const std::vector<NodeTrace>& trace) {
  for (const auto& node : trace) {
    out << "node " << node.id << " bag";
    for (int v : node.bag) out << ' ' << v;
    out << " rows " << node.table.size() << '\n';
    out << "  kept";
    for (int v : node.kept) out << ' ' << v;
    out << "\n  columns";
    for (const auto& c : node.table.columns()) out << ' ' << c.name;
    out << "\n  local " << node.local << '\n';
    out << "  input " << node.input_rows << " candidates " << node.candidate_rows << '\n';
    const auto text = node.table.to_text();
    std::size_t pos = 0;
    while (pos < text.size()) {
      const auto end = text.find('\n', pos);
      out << "  | " << text.substr(pos, end - pos) << '\n';
      pos = end + 1;
    }
  }
}

}  // namespace reldp::engine
