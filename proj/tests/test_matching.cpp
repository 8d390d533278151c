#include <doctest.h>

#include <random>

#include "hamcolor/constructions.hpp"
#include "hamcolor/matching.hpp"
#include "oracles.hpp"

using namespace hamcolor;

TEST_CASE("matching basics") {
  CHECK(max_matching(ColoredGraph(3, 1, {{0, 1, 1}, {1, 2, 1}})).size() == 1);
  std::vector<Edge> pm;
  for (int i = 0; i < 6; ++i) pm.push_back({2 * i, 2 * i + 1, 1});
  ColoredGraph g(12, 1, pm);
  Matching m = max_matching(g);
  CHECK(m.size() == 6);
  CHECK(is_valid_matching(g, m));
  CHECK(max_matching(g, 4).size() == 4);
  CHECK(max_matching(ColoredGraph(3, 1, {})).empty());
}

TEST_CASE("blossom: odd cycles need augmenting through contraction") {
  // Two triangles joined by a path force a blossom.
  ColoredGraph g(8, 1,
                 {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1},
                  {5, 6, 1}, {6, 7, 1}, {5, 7, 1}});
  CHECK(max_matching(g).size() == 4);
  // Petersen graph has a perfect matching.
  std::vector<Edge> pet;
  for (int i = 0; i < 5; ++i) {
    pet.push_back({i, (i + 1) % 5, 1});
    pet.push_back({i, i + 5, 1});
    pet.push_back({5 + i, 5 + (i + 2) % 5, 1});
  }
  ColoredGraph p(10, 1, pet);
  Matching m = max_matching(p);
  CHECK(m.size() == 5);
  CHECK(is_valid_matching(p, m));
}

TEST_CASE("max_matching equals the exhaustive oracle") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 3000; ++iter) {
    int n = 1 + static_cast<int>(rng() % 10);
    double p = static_cast<double>(rng() % 100) / 100.0;
    ColoredGraph g = oracle::random_graph(rng, n, 2, p);
    Matching m = max_matching(g);
    REQUIRE(is_valid_matching(g, m));
    REQUIRE(m.size() == oracle::max_matching_size(g));
  }
}

TEST_CASE("is_valid_matching rejects bad input") {
  ColoredGraph g(4, 2, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}});
  CHECK(is_valid_matching(g, {{0, 1, 1}, {2, 3, 1}}));
  CHECK_FALSE(is_valid_matching(g, {{0, 1, 1}, {1, 2, 2}}));
  CHECK_FALSE(is_valid_matching(g, {{0, 1, 2}}));
  CHECK_FALSE(is_valid_matching(g, {{0, 2, 1}}));
}

TEST_CASE("nearly empty") {
  ColoredGraph empty(5, 1, {});
  CHECK(is_nearly_empty(empty, SubgraphSpec::induced(VertexSet::range(0, 5)), 1).holds);
  std::vector<Edge> pm{{0, 1, 1}, {2, 3, 1}, {4, 5, 1}};
  ColoredGraph g(6, 1, pm);
  auto v = is_nearly_empty(g, SubgraphSpec::induced(VertexSet::range(0, 6)), 3);
  CHECK_FALSE(v.holds);
  CHECK(v.witness.size() == 3);
  CHECK(is_valid_matching(g, v.witness));
  CHECK(is_nearly_empty(g, SubgraphSpec::induced(VertexSet::range(0, 6)), 4).holds);
  Construction c = build_general_r(8, 2);
  for (int s = 1; s <= 4; ++s) {
    CHECK(is_nearly_empty(c.graph, SubgraphSpec::induced(c.parts[0]), s).holds);
  }
  CHECK_THROWS_AS(is_nearly_empty(g, SubgraphSpec::induced({}), 0), ParameterError);
}

TEST_CASE("nearly monochromatic") {
  ColoredGraph mono(4, 2, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {0, 3, 2}});
  CHECK(is_nearly_monochromatic(mono, SubgraphSpec::induced(VertexSet::range(0, 4)), 1, 2).holds);
  Construction c = build_general_r(8, 2);
  CHECK(is_nearly_monochromatic(c.graph, SubgraphSpec::induced(c.parts[1]), 1, 2).holds);
  auto bad = is_nearly_monochromatic(c.graph, SubgraphSpec::induced(c.parts[1]), 1, 1);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.size() == 1);
  CHECK(bad.witness[0].color == 2);
  CHECK(c.parts[1].contains(bad.witness[0].u));
  CHECK(
      is_nearly_monochromatic(c.graph, SubgraphSpec::between(c.parts[0], c.parts[1]), 1, 1).holds);
  CHECK_THROWS_AS(
      is_nearly_monochromatic(c.graph, SubgraphSpec::induced(c.parts[1]), 1, 3), ColorOutOfRange);
}

TEST_CASE("subgraph_edges") {
  Construction c = build_general_r(8, 2);
  CHECK(subgraph_edges(c.graph, SubgraphSpec::between(c.parts[0], c.parts[1])).size() == 12);
  CHECK(subgraph_edges(c.graph, SubgraphSpec::induced(c.parts[1])).size() == 15);
  CHECK_THROWS_AS(subgraph_edges(c.graph, SubgraphSpec::between({0, 1}, {1, 2})),
                  OverlappingSides);
}
