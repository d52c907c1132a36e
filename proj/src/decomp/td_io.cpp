#include <algorithm>
#include <charconv>
#include <sstream>

#include "reldp/decomp/tree_decomposition.hpp"
#include "reldp/error.hpp"

namespace reldp {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

long long to_int(const std::string& tok, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer, got '" + tok + "'", line);
  return v;
}

}  // namespace

TreeDecomposition read_td(std::string_view text, Warnings* warnings) {
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  std::size_t header_line = 0;
  long long num_bags = 0, declared_size = 0, num_vertices = 0;
  std::vector<TdNode> nodes;
  std::vector<char> has_bag;
  std::vector<std::pair<int, int>> edges;
  for (std::string line; std::getline(in, line);) {
    ++number;
    const auto t = tokens_of(line);
    if (t.empty() || t[0][0] == 'c') continue;
    if (t[0] == "s") {
      if (header_line != 0) throw ParseError("duplicate solution line", number);
      if (t.size() != 5 || t[1] != "td") throw ParseError("expected 's td <bags> <width+1> <vertices>'", number);
      header_line = number;
      num_bags = to_int(t[2], number);
      declared_size = to_int(t[3], number);
      num_vertices = to_int(t[4], number);
      if (num_bags < 1 || num_bags > (1 << 26) || declared_size < 0 || num_vertices < 0 || num_vertices > (1 << 30))
        throw ParseError("header values out of range", number);
      nodes.resize(static_cast<std::size_t>(num_bags));
      has_bag.assign(nodes.size(), 0);
      continue;
    }
    if (header_line == 0) throw ParseError("data before solution line", number);
    if (t[0] == "b") {
      if (t.size() < 2) throw ParseError("bag line without id", number);
      const auto id = to_int(t[1], number);
      if (id < 1 || id > num_bags)
        throw ParseError("bag id " + t[1] + " out of range 1.." + std::to_string(num_bags), number);
      auto& node = nodes[id - 1];
      if (has_bag[id - 1]) throw ParseError("bag " + t[1] + " listed twice", number);
      has_bag[id - 1] = 1;
      node.id = static_cast<int>(id);
      for (std::size_t i = 2; i < t.size(); ++i) {
        const auto v = to_int(t[i], number);
        if (v < 1 || v > num_vertices)
          throw ParseError("vertex " + t[i] + " out of range 1.." + std::to_string(num_vertices), number);
        node.bag.push_back(static_cast<int>(v));
      }
      continue;
    }
    if (t.size() != 2) throw ParseError("expected a tree edge 'i j'", number);
    const auto a = to_int(t[0], number);
    const auto c = to_int(t[1], number);
    if (a < 1 || a > num_bags || c < 1 || c > num_bags)
      throw ParseError("tree edge endpoint out of range 1.." + std::to_string(num_bags), number);
    if (a == c) throw ParseError("tree edge is a loop", number);
    edges.emplace_back(static_cast<int>(a) - 1, static_cast<int>(c) - 1);
  }
  if (header_line == 0) throw ParseError("missing solution line");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!has_bag[i]) throw ParseError("bag " + std::to_string(i + 1) + " is not listed");
  if (static_cast<long long>(edges.size()) != num_bags - 1)
    throw ParseError("a tree on " + std::to_string(num_bags) + " bags needs " + std::to_string(num_bags - 1) +
                     " edges, found " + std::to_string(edges.size()));

  std::vector<std::vector<int>> adj(nodes.size());
  for (const auto& [a, c] : edges) {
    adj[a].push_back(c);
    adj[c].push_back(a);
  }
  const int root = static_cast<int>(nodes.size()) - 1;
  std::vector<char> seen(nodes.size(), 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    std::sort(adj[v].begin(), adj[v].end());
    for (int x : adj[v]) {
      if (seen[x]) continue;
      seen[x] = 1;
      nodes[v].children.push_back(x);
      nodes[x].parent = v;
      stack.push_back(x);
    }
  }
  if (reached != nodes.size()) throw ParseError("tree edges do not connect all bags");

  std::size_t max_bag = 0;
  for (const auto& node : nodes) max_bag = std::max(max_bag, node.bag.size());
  if (static_cast<long long>(max_bag) != declared_size && warnings)
    warnings->push_back("header declares largest bag size " + std::to_string(declared_size) + ", actual " +
                        std::to_string(max_bag));
  try {
    return TreeDecomposition(static_cast<int>(num_vertices), std::move(nodes), root);
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

std::string write_td(const TreeDecomposition& td) {
  std::vector<int> by_id(td.size());
  for (std::size_t i = 0; i < td.size(); ++i) by_id[i] = static_cast<int>(i);
  std::sort(by_id.begin(), by_id.end(), [&](int a, int b) { return td.node(a).id < td.node(b).id; });
  std::vector<int> rank(td.size());
  for (std::size_t r = 0; r < by_id.size(); ++r) rank[by_id[r]] = static_cast<int>(r) + 1;

  std::ostringstream os;
  os << "s td " << td.size() << ' ' << td.width() + 1 << ' ' << td.num_vertices() << '\n';
  for (int i : by_id) {
    os << "b " << rank[i];
    for (int v : td.node(i).bag) os << ' ' << v;
    os << '\n';
  }
  for (int i : by_id)
    for (int c : td.node(i).children) os << rank[i] << ' ' << rank[c] << '\n';
  return os.str();
}

}  // namespace reldp
