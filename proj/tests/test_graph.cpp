#include <doctest.h>

#include <random>

#include "hamcolor/constructions.hpp"
#include "hamcolor/graph.hpp"
#include "oracles.hpp"

using namespace hamcolor;

TEST_CASE("load a small graph") {
  ColoredGraph g = load_graph("3 2\n0 1 1\n1 2 2\n");
  CHECK(g.n() == 3);
  CHECK(g.r() == 2);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge{0, 1, 1});
  CHECK(g.edges()[1] == Edge{1, 2, 2});
  CHECK(g.color(2, 1) == 2);
  CHECK_FALSE(g.color(0, 2).has_value());
  CHECK(g.degree(1) == 2);
}

TEST_CASE("comments and reversed endpoints") {
  ColoredGraph g = load_graph("# header comment\n3 1\n# edge list\n2 0 1\n");
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges()[0] == Edge{0, 2, 1});
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(load_graph("2 1\n0 0 1\n"), ValidationError);
  CHECK_THROWS_AS(load_graph("3 1\n0 1 1\n1 0 1\n"), ValidationError);
  CHECK_THROWS_AS(load_graph("3 2\n0 1 3\n"), ValidationError);
  CHECK_THROWS_AS(load_graph("3 2\n0 1 0\n"), ValidationError);
  CHECK_THROWS_AS(load_graph("3 2\n0 5 1\n"), ValidationError);
  CHECK_THROWS_AS(ColoredGraph(2, 0, {}), ValidationError);
}

TEST_CASE("parse errors carry the line number") {
  try {
    load_graph("3 2\n0 1 1\n1 x 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(load_graph(""), ParseError);
  CHECK_THROWS_AS(load_graph("0 1\n"), ParseError);
  CHECK_THROWS_AS(load_graph("3 2\n0  1 1\n"), ParseError);
  CHECK_THROWS_AS(load_graph("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(load_graph("3 2\n0 1 1 4\n"), ParseError);
  CHECK_THROWS_AS(load_graph("3\n"), ParseError);
}

TEST_CASE("save_graph is canonical") {
  CHECK(save_graph(ColoredGraph(1, 1, {})) == "1 1\n");
  ColoredGraph g(4, 2, {{3, 2, 1}, {1, 0, 2}, {0, 3, 1}});
  CHECK(save_graph(g) == "4 2\n0 1 2\n0 3 1\n2 3 1\n");
  CHECK(save_graph(load_graph(save_graph(g))) == save_graph(g));
}

TEST_CASE("round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + static_cast<int>(rng() % 12);
    int r = 1 + static_cast<int>(rng() % 4);
    ColoredGraph g = oracle::random_graph(rng, n, r, 0.4);
    ColoredGraph h = load_graph(save_graph(g));
    CHECK(h.n() == g.n());
    CHECK(h.r() == g.r());
    CHECK(h.edges() == g.edges());
    // Adjacency agrees with the edge list in both directions.
    std::size_t half_degrees = 0;
    for (Vertex v = 0; v < n; ++v) {
      for (const auto& nb : g.neighbors(v)) {
        CHECK(g.color(nb.vertex, v) == nb.color);
        ++half_degrees;
      }
    }
    CHECK(half_degrees == 2 * g.edge_count());
  }
}

TEST_CASE("min_degree") {
  CHECK(min_degree(ColoredGraph(4, 1, {})) == 0);
  std::vector<Edge> k5;
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) k5.push_back({u, v, 1 + (u + v) % 3});
  }
  CHECK(min_degree(ColoredGraph(5, 3, k5)) == 4);
  CHECK(min_degree(build_general_r(8, 2).graph) == 6);
}

TEST_CASE("color_class") {
  ColoredGraph tri(3, 2, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  CHECK(color_class(tri, 1).size() == 3);
  CHECK(color_class(tri, 2).empty());
  Construction t = build_tripartite_3(9);
  auto c1 = color_class(t.graph, 1);
  CHECK(c1.size() == 9);
  for (const Edge& e : c1) {
    CHECK_FALSE(t.parts[0].contains(e.u));
    CHECK_FALSE(t.parts[0].contains(e.v));
  }
  CHECK_THROWS_AS(color_class(tri, 3), ColorOutOfRange);
}

TEST_CASE("induced_subgraph") {
  Construction c = build_general_r(8, 2);
  Subgraph all = induced_subgraph(c.graph, VertexSet::range(0, 8));
  CHECK(all.graph.edges() == c.graph.edges());
  Subgraph none = induced_subgraph(c.graph, {});
  CHECK(none.graph.n() == 0);
  Subgraph hub = induced_subgraph(c.graph, c.parts[1]);
  CHECK(hub.graph.n() == 6);
  CHECK(hub.graph.edge_count() == 15);
  CHECK(color_class(hub.graph, 2).size() == 15);
  CHECK(hub.to_parent == c.parts[1].items());
  CHECK_THROWS_AS(induced_subgraph(c.graph, {0, 9}), ValidationError);
}

TEST_CASE("bipartite_between") {
  Construction c = build_general_r(8, 2);
  BipartiteSubgraph b = bipartite_between(c.graph, c.parts[0], c.parts[1]);
  CHECK(b.graph.edge_count() == 12);
  CHECK(color_class(b.graph, 1).size() == 12);
  CHECK(b.side_a == VertexSet{0, 1});
  BipartiteSubgraph e = bipartite_between(c.graph, {}, c.parts[1]);
  CHECK(e.graph.edge_count() == 0);
  CHECK(e.graph.n() == 6);
  Construction t = build_tripartite_3(9);
  BipartiteSubgraph t12 = bipartite_between(t.graph, t.parts[0], t.parts[1]);
  CHECK(color_class(t12.graph, 3).size() == 9);
  CHECK(t12.graph.edge_count() == 9);
  CHECK_THROWS_AS(bipartite_between(c.graph, {0, 2}, {2, 3}), OverlappingSides);
}

TEST_CASE("VertexSet algebra") {
  VertexSet a{3, 1, 2, 3};
  CHECK(a.items() == std::vector<Vertex>{1, 2, 3});
  VertexSet b{2, 5};
  CHECK(a.set_union(b) == VertexSet{1, 2, 3, 5});
  CHECK(a.set_difference(b) == VertexSet{1, 3});
  CHECK(a.set_intersection(b) == VertexSet{2});
  CHECK(a.symmetric_difference_size(b) == 3);
  CHECK(VertexSet::range(2, 5) == VertexSet{2, 3, 4});
  CHECK_THROWS_AS(b.check_bounds(5), ValidationError);
}
