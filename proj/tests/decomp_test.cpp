#include <catch_amalgamated.hpp>

#include "reldp/decomp/tree_decomposition.hpp"
#include "reldp/error.hpp"
#include "support.hpp"

#include <memory>
#include <numeric>

using namespace reldp;

namespace {

Graph example_graph() { return parse_dimacs_graph(read_file(testing::data_path("example.gr"))); }

TreeDecomposition star(int leaves) {
  std::vector<TdNode> nodes;
  nodes.push_back(TdNode{1, {1}, {}, -1});
  for (int i = 1; i <= leaves; ++i) {
    nodes[0].children.push_back(i);
    nodes.push_back(TdNode{i + 1, {1, i + 1}, {}, 0});
  }
  return TreeDecomposition(leaves + 1, nodes, 0);
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int i = 2; i <= leaves + 1; ++i) g.add_edge(1, i);
  return g;
}

std::size_t max_children(const TreeDecomposition& td) {
  std::size_t m = 0;
  for (const auto& n : td.nodes()) m = std::max(m, n.children.size());
  return m;
}

}  // namespace

TEST_CASE("decompose small graphs") {
  SECTION("example graph reaches width 2") {
    const auto g = example_graph();
    const auto td = decompose(g, 1);
    CHECK_FALSE(validate(td, g).has_value());
    CHECK(td.width() == 2);
  }
  SECTION("edgeless graph") {
    const Graph g(5);
    const auto td = decompose(g, 3);
    CHECK_FALSE(validate(td, g).has_value());
    CHECK(td.width() == 0);
  }
  SECTION("path on four vertices") {
    const Graph g(4, {{1, 2}, {2, 3}, {3, 4}});
    const auto td = decompose(g, 7);
    CHECK_FALSE(validate(td, g).has_value());
    CHECK(td.width() == 1);
  }
  SECTION("empty graph") {
    const auto td = decompose(Graph(0), 1);
    CHECK(td.size() == 1);
    CHECK(td.width() == -1);
  }
  SECTION("ids are post-order with the root last") {
    const auto td = decompose(testing::random_graph(*std::make_unique<testing::Rng>(5), 20, 0.2), 9);
    const auto order = td.post_order();
    for (std::size_t i = 0; i < order.size(); ++i) CHECK(td.node(order[i]).id == static_cast<int>(i) + 1);
    CHECK(td.node(td.root()).id == td.max_id());
  }
}

TEST_CASE("validate") {
  const auto g = example_graph();
  SECTION("single bag") {
    const TreeDecomposition td(4, {TdNode{1, {1, 2, 3, 4}, {}, -1}}, 0);
    CHECK_FALSE(validate(td, g).has_value());
    CHECK(td.width() == 3);
  }
  SECTION("example decomposition") {
    const auto td = read_td(read_file(testing::data_path("example.td")));
    CHECK_FALSE(validate(td, g).has_value());
    CHECK(td.width() == 2);
  }
  SECTION("missing edge") {
    auto g2 = g;
    g2.add_edge(2, 4);
    const auto v = validate(read_td(read_file(testing::data_path("example.td"))), g2);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::edge_coverage);
    CHECK(v->vertex == 2);
    CHECK(v->other_vertex == 4);
  }
  SECTION("uncovered vertex") {
    const TreeDecomposition td(4, {TdNode{1, {1, 2, 3}, {}, -1}}, 0);
    const auto v = validate(td, g);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::vertex_coverage);
    CHECK(v->vertex == 4);
  }
  SECTION("disconnected occurrences") {
    // 3: {1,2}  <- 2: {2,3} <- 1: {1,3}
    const TreeDecomposition td(3, {TdNode{1, {1, 3}, {}, 1}, TdNode{2, {2, 3}, {0}, 2}, TdNode{3, {1, 2}, {1}, -1}}, 2);
    const auto v = validate(td, Graph(3, {{1, 2}, {2, 3}, {1, 3}}));
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::connectedness);
    CHECK(v->vertex == 1);
  }
  SECTION("vertex outside the graph") {
    const TreeDecomposition td(5, {TdNode{1, {1, 2, 3, 4, 5}, {}, -1}}, 0);
    const auto v = validate(td, g);
    REQUIRE(v.has_value());
    CHECK(v->kind == Violation::Kind::unknown_vertex);
  }
  SECTION("malformed trees are rejected at construction") {
    CHECK_THROWS_AS(TreeDecomposition(2, {TdNode{1, {1}, {}, -1}, TdNode{2, {2}, {}, -1}}, 0), ValidationError);
    CHECK_THROWS_AS(TreeDecomposition(2, {TdNode{1, {3}, {}, -1}}, 0), ValidationError);
    CHECK_THROWS_AS(TreeDecomposition(2, {TdNode{1, {1}, {1}, -1}, TdNode{1, {2}, {}, 0}}, 0), ValidationError);
  }
}

TEST_CASE("limit children") {
  SECTION("star with seven children") {
    const auto td = star(7);
    const auto limited = limit_children(td, 5);
    CHECK(max_children(limited) <= 5);
    CHECK(limited.size() == td.size() + 1);
    CHECK_FALSE(validate(limited, star_graph(7)).has_value());
    CHECK(limited.width() == td.width());
  }
  SECTION("already within the limit") {
    const auto td = star(4);
    CHECK(limit_children(td, 5) == td);
  }
  SECTION("binary") {
    const auto td = star(9);
    const auto limited = limit_children(td, 2);
    CHECK(max_children(limited) <= 2);
    CHECK_FALSE(validate(limited, star_graph(9)).has_value());
    CHECK(limited.width() == td.width());
  }
  SECTION("k below two") { CHECK_THROWS_AS(limit_children(star(3), 1), std::invalid_argument); }
}

TEST_CASE("normalize root") {
  const auto nice = read_td(read_file(testing::data_path("example_nice.td")));
  CHECK(normalize_root(nice) == nice);

  const TreeDecomposition single(1, {TdNode{1, {1}, {}, -1}}, 0);
  const auto n = normalize_root(single);
  CHECK(n.size() == 2);
  CHECK(n.node(n.root()).bag.empty());
  CHECK(n.node(n.root()).children.size() == 1);
  CHECK(n.node(n.root()).id == 2);

  const auto empty = normalize_root(decompose(Graph(0), 1));
  CHECK(empty.size() == 1);
  CHECK(empty.node(empty.root()).bag.empty());
}

TEST_CASE("PACE format") {
  SECTION("nice example decomposition") {
    const auto td = read_td(read_file(testing::data_path("example_nice.td")));
    CHECK(td.size() == 12);
    CHECK(td.node(td.root()).id == 12);
    CHECK(is_nice(td));
    CHECK_FALSE(validate(td, example_graph()).has_value());
    const auto& t11 = td.node(td.index_of(11));
    REQUIRE(t11.children.size() == 2);
    CHECK(td.node(t11.children[0]).id == 6);
    CHECK(td.node(t11.children[1]).id == 10);
    CHECK(node_type(td, td.index_of(11)) == NodeType::join);
    CHECK(node_type(td, td.index_of(4)) == NodeType::intr);
    CHECK(node_type(td, td.index_of(5)) == NodeType::rem);
    CHECK(node_type(td, td.index_of(1)) == NodeType::leaf);
  }
  SECTION("minimal decomposition") {
    CHECK(write_td(TreeDecomposition()) == "s td 1 0 0\nb 1\n");
    CHECK(read_td("s td 1 0 0\nb 1\n") == TreeDecomposition());
  }
  SECTION("round trip") {
    const auto text = read_file(testing::data_path("example_nice.td"));
    const auto once = write_td(read_td(text));
    CHECK(write_td(read_td(once)) == once);
    CHECK(read_td(once) == read_td(text));
  }
  SECTION("errors") {
    CHECK_THROWS_AS(read_td("s td 3 1 2\nb 1 1\nb 2 2\nb 3\n1 2\n"), ParseError);
    CHECK_THROWS_AS(read_td("s td 4 1 2\nb 1 1\nb 2 2\nb 3\nb 4\n1 2\n3 4\n1 2\n"), ParseError);
    CHECK_THROWS_AS(read_td("s td 2 1 2\nb 1 1\nb 3 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(read_td("s td 2 1 2\nb 1 1\nb 2 7\n1 2\n"), ParseError);
    CHECK_THROWS_AS(read_td("b 1 1\n"), ParseError);
  }
  SECTION("width field mismatch warns") {
    Warnings w;
    const auto td = read_td("s td 2 5 2\nb 1 1\nb 2 1 2\n1 2\n", &w);
    CHECK(td.width() == 1);
    CHECK(w.size() == 1);
  }
}

TEST_CASE("node deltas") {
  const auto td = read_td(read_file(testing::data_path("example_nice.td")));
  const auto d4 = node_delta(td, td.index_of(4));
  CHECK(d4.introduced == std::vector<int>{2});
  CHECK(d4.shared == std::vector<int>{1, 2});
  const auto d5 = node_delta(td, td.index_of(5));
  CHECK(d5.introduced.empty());
  CHECK(d5.removed_per_child == std::vector<std::vector<int>>{{3}});
  const auto d11 = node_delta(td, td.index_of(11));
  CHECK(d11.removed_per_child == std::vector<std::vector<int>>{{}, {}});
  CHECK(d11.shared.empty());
}

TEST_CASE("make_nice") {
  const auto g = example_graph();
  const auto td = make_nice(read_td(read_file(testing::data_path("example.td"))));
  CHECK(is_nice(td));
  CHECK(td.node(td.root()).bag.empty());
  CHECK_FALSE(validate(td, g).has_value());
  CHECK(td.width() == 2);
}

TEST_CASE("decompositions of random graphs are valid", "[property]") {
  testing::Rng rng(31);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = testing::uniform(rng, 0, 50);
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto g = testing::random_graph(rng, n, density);
    const auto seed = rng();
    const auto td = decompose(g, seed);
    INFO("n=" << n << " density=" << density);
    REQUIRE_FALSE(validate(td, g).has_value());
    CHECK(decompose(g, seed) == td);

    const int k = testing::uniform(rng, 2, 5);
    const auto limited = limit_children(td, k);
    CHECK_FALSE(validate(limited, g).has_value());
    CHECK(max_children(limited) <= static_cast<std::size_t>(k));
    CHECK(limited.width() == td.width());

    const auto normalized = normalize_root(limited);
    CHECK_FALSE(validate(normalized, g).has_value());
    CHECK(normalized.width() == td.width());
    CHECK(normalized.node(normalized.root()).bag.empty());
    CHECK(normalized.node(normalized.root()).id == normalized.max_id());

    if (n <= 20) {
      const auto nice = make_nice(td);
      CHECK(is_nice(nice));
      CHECK_FALSE(validate(nice, g).has_value());
      CHECK(nice.width() == td.width());
    }
    CHECK(read_td(write_td(normalized)) == normalized);
  }
}

TEST_CASE("width is at least clique size minus one", "[property]") {
  testing::Rng rng(32);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = testing::uniform(rng, 3, 30);
    auto g = testing::random_graph(rng, n, 0.1);
    const int k = testing::uniform(rng, 2, std::min(n, 8));
    std::vector<int> clique(n);
    std::iota(clique.begin(), clique.end(), 1);
    std::shuffle(clique.begin(), clique.end(), rng);
    clique.resize(k);
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) g.add_edge(clique[i], clique[j]);
    CHECK(decompose(g, rng()).width() >= k - 1);
  }
}
