#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <tuple>

#include "reldp/decomp/tree_decomposition.hpp"

namespace reldp {

namespace {

using Key = std::tuple<long, std::size_t, std::uint64_t, int>;  // fill, degree, tie, vertex

long fill_in(const std::vector<std::set<int>>& adj, int v) {
  long missing = 0;
  const auto& nb = adj[v];
  for (auto a = nb.begin(); a != nb.end(); ++a)
    for (auto b = std::next(a); b != nb.end(); ++b)
      if (!adj[*a].count(*b)) ++missing;
  return missing;
}

struct Elimination {
  std::vector<std::vector<int>> bags;  // indexed by vertex
  std::vector<int> parent;             // vertex whose bag is the parent, 0 for roots
  int last = 0;
};

Elimination eliminate(const Graph& g, std::uint64_t seed) {
  const int n = g.num_vertices();
  std::vector<std::set<int>> adj(n + 1);
  for (const auto& [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> tie(n + 1);
  for (int v = 1; v <= n; ++v) tie[v] = rng();

  std::vector<Key> key(n + 1);
  std::set<Key> queue;
  for (int v = 1; v <= n; ++v) {
    key[v] = Key{fill_in(adj, v), adj[v].size(), tie[v], v};
    queue.insert(key[v]);
  }

  Elimination out;
  out.bags.resize(n + 1);
  out.parent.assign(n + 1, 0);
  std::vector<int> position(n + 1, -1);
  int step = 0;
  std::vector<int> eliminated_order;
  while (!queue.empty()) {
    const int v = std::get<3>(*queue.begin());
    queue.erase(queue.begin());
    position[v] = step++;
    eliminated_order.push_back(v);
    const std::vector<int> nb(adj[v].begin(), adj[v].end());
    out.bags[v] = nb;
    out.bags[v].push_back(v);
    std::sort(out.bags[v].begin(), out.bags[v].end());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      adj[nb[i]].erase(v);
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    }
    adj[v].clear();
    std::set<int> affected(nb.begin(), nb.end());
    for (int u : nb) affected.insert(adj[u].begin(), adj[u].end());
    for (int u : affected) {
      queue.erase(key[u]);
      key[u] = Key{fill_in(adj, u), adj[u].size(), tie[u], u};
      queue.insert(key[u]);
    }
  }
  // Parent of v's bag: the earliest eliminated among its later neighbours.
  for (int v = 1; v <= n; ++v) {
    int best = 0;
    for (int u : out.bags[v])
      if (u != v && (best == 0 || position[u] < position[best])) best = u;
    out.parent[v] = best;
  }
  out.last = eliminated_order.back();
  return out;
}

}  // namespace

TreeDecomposition decompose(const Graph& g, std::uint64_t seed) {
  const int n = g.num_vertices();
  if (n == 0) return TreeDecomposition();
  auto elim = eliminate(g, seed);

  // Undirected tree over vertex-indexed bags; separate components hang off
  // the last eliminated vertex.
  std::vector<std::set<int>> tree(n + 1);
  for (int v = 1; v <= n; ++v) {
    int p = elim.parent[v];
    if (p == 0 && v != elim.last) p = elim.last;
    if (p == 0) continue;
    tree[v].insert(p);
    tree[p].insert(v);
  }

  std::vector<char> alive(n + 1, 1);
  std::deque<int> work;
  for (int v = 1; v <= n; ++v) work.push_back(v);
  auto subset = [&](int a, int b) {
    return std::includes(elim.bags[b].begin(), elim.bags[b].end(), elim.bags[a].begin(), elim.bags[a].end());
  };
  while (!work.empty()) {
    const int a = work.front();
    work.pop_front();
    if (!alive[a]) continue;
    int into = 0;
    for (int b : tree[a])
      if (subset(a, b)) {
        into = b;
        break;
      }
    if (into == 0) continue;
    alive[a] = 0;
    tree[into].erase(a);
    for (int x : tree[a]) {
      if (x == into) continue;
      tree[x].erase(a);
      tree[x].insert(into);
      tree[into].insert(x);
    }
    tree[a].clear();
    work.push_back(into);
    for (int x : tree[into]) work.push_back(x);
  }

  std::vector<int> live;
  for (int v = 1; v <= n; ++v)
    if (alive[v]) live.push_back(v);

  // Centroid: minimize the largest component left after removing the node.
  std::vector<int> parent(n + 1, 0), order, subtree(n + 1, 1);
  order.reserve(live.size());
  std::vector<int> stack{live.front()};
  parent[live.front()] = -1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int x : tree[v])
      if (x != parent[v]) {
        parent[x] = v;
        stack.push_back(x);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] > 0) subtree[parent[*it]] += subtree[*it];
  const int total = static_cast<int>(live.size());
  int root = live.front();
  int best = total + 1;
  for (int v : live) {
    int worst = total - subtree[v];
    for (int x : tree[v])
      if (x != parent[v]) worst = std::max(worst, subtree[x]);
    if (worst < best) {
      best = worst;
      root = v;
    }
  }

  std::vector<int> index(n + 1, -1);
  for (std::size_t i = 0; i < live.size(); ++i) index[live[i]] = static_cast<int>(i);
  std::vector<TdNode> nodes(live.size());
  std::vector<int> queue{root};
  std::vector<char> seen(n + 1, 0);
  seen[root] = 1;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    auto& node = nodes[index[v]];
    node.id = index[v] + 1;
    node.bag = elim.bags[v];
    for (int x : tree[v])
      if (!seen[x]) {
        seen[x] = 1;
        node.children.push_back(index[x]);
        nodes[index[x]].parent = index[v];
        queue.push_back(x);
      }
  }
  return renumber_post_order(TreeDecomposition(n, std::move(nodes), index[root]));
}

}  // namespace reldp
