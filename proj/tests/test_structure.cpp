#include <doctest.h>

#include <random>

#include "hamcolor/bowtie.hpp"
#include "hamcolor/constructions.hpp"
#include "hamcolor/structure.hpp"
#include "oracles.hpp"

using namespace hamcolor;

namespace {

ColoredGraph triangle(Color vu, Color vw, Color uw) {
  return ColoredGraph(3, 3, {{0, 1, vu}, {0, 2, vw}, {1, 2, uw}});
}

bool is_label(const VertexType& t, const VertexLabel& label) {
  return t.status == VertexType::Status::Classified && t.label && *t.label == label;
}

StructureCertificate recover(const ColoredGraph& g, int m = 1) {
  StripResult s = strip_bad_bowties(g);
  return recover_partition(g, s.residual, s.removed, m);
}

}  // namespace

TEST_CASE("neighborhood profiles") {
  ColoredGraph iso(3, 2, {{1, 2, 1}});
  CHECK(neighborhood_profile(iso, 0).colors.empty());
  Construction c = build_general_r(8, 2);
  auto p = neighborhood_profile(c.graph, 0);
  CHECK(p.colors == std::vector<Color>{1});
  CHECK(p.with_color(1) == c.parts[1]);
  Construction t = build_tripartite_3(9);
  auto q = neighborhood_profile(t.graph, 0);
  CHECK(q.colors == std::vector<Color>{2, 3});
  CHECK(q.with_color(3) == t.parts[1]);
  CHECK(q.with_color(2) == t.parts[2]);
  CHECK(q.all() == t.parts[1].set_union(t.parts[2]));
  CHECK(q.without_color(3) == t.parts[2]);
  CHECK(cross_edges(t.graph, q, 2, 3).size() == 9);
}

TEST_CASE("triangle edge types") {
  using K = TriangleEdgeType::Kind;
  CHECK(triangle_edge_type(triangle(2, 2, 2), 0, 1, 2) == TriangleEdgeType{K::C, 2, 0, 0});
  CHECK(triangle_edge_type(triangle(1, 2, 3), 0, 1, 2) == TriangleEdgeType{K::A, 1, 2, 3});
  CHECK(triangle_edge_type(triangle(2, 1, 3), 0, 1, 2) == TriangleEdgeType{K::A, 1, 2, 3});
  CHECK(triangle_edge_type(triangle(1, 1, 2), 0, 1, 2) == TriangleEdgeType{K::B, 1, 2, 0});
  // {x, y} = {1, 2} with the internal edge matching one side: c of the other.
  CHECK(triangle_edge_type(triangle(1, 2, 1), 0, 1, 2) == TriangleEdgeType{K::C, 2, 0, 0});
  CHECK(triangle_edge_type(triangle(1, 2, 2), 0, 1, 2) == TriangleEdgeType{K::C, 1, 0, 0});
  CHECK(triangle_edge_type(triangle(1, 2, 3), 0, 1, 2).to_string() == "a(1,2,3)");
  CHECK_THROWS_AS(triangle_edge_type(ColoredGraph(3, 1, {{0, 1, 1}}), 0, 1, 2), NotATriangle);
}

TEST_CASE("classification on the constructions") {
  Construction c = build_general_r(8, 2);
  for (Vertex v : c.parts[1]) CHECK(is_label(classify_vertex(c.graph, v), TypeC{2}));
  for (Vertex v : c.parts[0]) CHECK(is_label(classify_vertex(c.graph, v), TypeB{1, 2}));
  Construction t = build_tripartite_3(9);
  for (int i = 0; i < 3; ++i) {
    std::vector<Color> others;
    for (Color x = 1; x <= 3; ++x) {
      if (x != i + 1) others.push_back(x);
    }
    for (Vertex v : t.parts[i]) {
      CHECK(is_label(classify_vertex(t.graph, v), TypeA{others[0], others[1], i + 1}));
    }
  }
  Construction big = build_general_r(16, 4);
  for (int i = 0; i < 3; ++i) {
    for (Vertex v : big.parts[i]) CHECK(is_label(classify_vertex(big.graph, v), TypeB{i + 1, 4}));
  }
}

TEST_CASE("vacuous and unclassified vertices") {
  ColoredGraph star(4, 2, {{0, 1, 1}, {0, 2, 2}, {0, 3, 1}});
  VertexType t = classify_vertex(star, 0);
  CHECK(t.status == VertexType::Status::Vacuous);
  REQUIRE(t.label.has_value());
  for (const VertexLabel& l : t.consistent) CHECK(satisfies(star, neighborhood_profile(star, 0), l));
  // Mixed triangle patterns at the center.
  ColoredGraph mixed(5, 3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {0, 4, 1}, {3, 4, 2}});
  VertexType u = classify_vertex(mixed, 0);
  CHECK(u.status == VertexType::Status::Unclassified);
  CHECK_FALSE(u.evidence.empty());
  // Uniform b(1,2) with a third incident color breaks B.
  ColoredGraph three(4, 3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 2}, {0, 3, 3}});
  CHECK(classify_vertex(three, 0).status == VertexType::Status::Unclassified);
}

TEST_CASE("classification agrees with the literal definitions on random graphs") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 4 + static_cast<int>(rng() % 5);
    int r = 2 + static_cast<int>(rng() % 2);
    ColoredGraph g = oracle::random_graph(rng, n, r, 0.7);
    for (Vertex v = 0; v < n; ++v) {
      VertexType t = classify_vertex(g, v);
      auto p = neighborhood_profile(g, v);
      if (t.status == VertexType::Status::Classified) {
        CHECK(satisfies(g, p, *t.label));
      }
      // Any label that holds on a neighborhood with an edge must be the one
      // the triangle typing picks.
      if (t.status != VertexType::Status::Vacuous) {
        std::vector<VertexLabel> holding;
        for (Color a = 1; a <= r; ++a) {
          if (satisfies_type_c(g, p, TypeC{a})) holding.push_back(TypeC{a});
          for (Color b = 1; b <= r; ++b) {
            if (satisfies_type_b(g, p, TypeB{a, b})) holding.push_back(TypeB{a, b});
            for (Color c = 1; c <= r; ++c) {
              if (a < b && satisfies_type_a(g, p, TypeA{a, b, c})) {
                holding.push_back(TypeA{a, b, c});
              }
            }
          }
        }
        if (t.status == VertexType::Status::Classified) {
          CHECK(std::find(holding.begin(), holding.end(), *t.label) != holding.end());
        }
      }
    }
  }
}

TEST_CASE("global dichotomy") {
  DichotomyReport d = global_dichotomy(build_general_r(8, 2).graph);
  CHECK(d.mode == StructureMode::DominantColor);
  CHECK(d.k == 2);
  CHECK(global_dichotomy(build_general_r(16, 4).graph).k == 4);
  CHECK(global_dichotomy(build_tripartite_3(9).graph).mode == StructureMode::TripartiteA);
  DichotomyReport e = global_dichotomy(ColoredGraph(5, 2, {}));
  CHECK(e.mode == StructureMode::Inconclusive);
  CHECK(e.has_bad_bowtie == false);
  CHECK(e.nonconforming.size() == 5);
}

TEST_CASE("partition recovery on pristine constructions") {
  for (auto [n, r] : {std::pair{8, 2}, {16, 2}, {16, 4}, {12, 3}}) {
    Construction c = build_general_r(n, r);
    StructureCertificate cert = recover(c.graph);
    CHECK(cert.mode == StructureMode::DominantColor);
    CHECK(cert.k == r);
    CHECK(cert.parts == c.parts);
    for (const auto& w : cert.slack) CHECK(w.empty());
    for (auto d : cert.symmetric_differences) CHECK(d == 0);
  }
  Construction t = build_tripartite_3(9);
  StructureCertificate cert = recover(t.graph);
  CHECK(cert.mode == StructureMode::TripartiteA);
  CHECK(cert.parts == t.parts);
  CHECK(cert.ideal_sizes == std::vector<std::string>{"3", "3", "3"});
  for (const auto& w : cert.slack) CHECK(w.empty());
}

TEST_CASE("recovery after one recolored edge") {
  Construction c = build_general_r(16, 2);
  std::vector<Edge> edges = c.graph.edges();
  for (Edge& e : edges) {
    if (e.u == 6 && e.v == 7) e.color = 1;
  }
  ColoredGraph g(16, 2, edges);
  StripResult s = strip_bad_bowties(g);
  CHECK(s.t() <= 1);
  StructureCertificate cert = recover_partition(g, s.residual, s.removed, 1);
  REQUIRE(cert.mode == StructureMode::DominantColor);
  CHECK(cert.k == 2);
  CHECK(cert.parts[1].symmetric_difference_size(cert.classes[1]) <= 5 * s.t());
  CHECK(cert.parts[0].size() + cert.parts[1].size() == 16);
  CHECK(check_certificate(g, cert, 400).pass());
}

TEST_CASE("rounded targets") {
  // 2r does not divide n: targets round and the hub absorbs the rest.
  Construction c = build_general_r(8, 2);
  std::vector<Edge> edges = c.graph.edges();
  edges.push_back({0, 8, 1});
  for (Vertex v : c.parts[1]) edges.push_back({v, 8, 2});
  ColoredGraph g(9, 2, edges);
  StructureCertificate cert = recover(g);
  CHECK(cert.realized_sizes[0] + cert.realized_sizes[1] == 9);
  CHECK(cert.ideal_sizes == std::vector<std::string>{"9/4", "27/4"});
  CHECK(cert.realized_sizes[0] == 2);
}

TEST_CASE("inconclusive input cannot be recovered") {
  ColoredGraph g(4, 2, {});
  CHECK_THROWS_AS(recover(g), ModeInconclusive);
  Construction c = build_general_r(8, 2);
  StripResult s = strip_bad_bowties(c.graph);
  CHECK_THROWS_AS(recover_partition(c.graph, s.residual, s.removed, 0), ParameterError);
}

TEST_CASE("certificates") {
  Construction c = build_general_r(8, 2);
  StructureCertificate cert = recover(c.graph);
  CertificateVerdict v = check_certificate(c.graph, cert, 1);
  CHECK(v.pass());
  CHECK(v.conditions.size() == 3);
  CHECK(v.conditions[0].name == "G[V2] is (1,2)-nearly monochromatic");

  Construction t = build_tripartite_3(9);
  CertificateVerdict tv = check_certificate(t.graph, recover(t.graph), 1);
  CHECK(tv.pass());
  CHECK(tv.conditions.size() == 6);

  // An equal split that ignores the structure fails somewhere, with a witness.
  StructureCertificate bad = cert;
  bad.parts = {VertexSet{0, 2, 4, 6}, VertexSet{1, 3, 5, 7}};
  CertificateVerdict bv = check_certificate(c.graph, bad, 1);
  CHECK_FALSE(bv.pass());
  bool witnessed = false;
  for (const auto& cond : bv.conditions) {
    if (!cond.pass) {
      witnessed = cond.witness.size() == 1;
      CHECK(is_valid_matching(c.graph, cond.witness));
    }
  }
  CHECK(witnessed);

  StructureCertificate overlap = cert;
  overlap.parts = {VertexSet{0, 1, 2}, VertexSet{2, 3, 4, 5, 6, 7}};
  CHECK_THROWS_AS(check_certificate(c.graph, overlap, 1), NotAPartition);
  StructureCertificate missing = cert;
  missing.parts = {VertexSet{0, 1}, VertexSet{2, 3, 4, 5, 6}};
  CHECK_THROWS_AS(check_certificate(c.graph, missing, 1), NotAPartition);
  CHECK_THROWS_AS(check_certificate(c.graph, cert, 0), ParameterError);
  CHECK(default_matching_bound(StructureMode::DominantColor, 2, 1) == 400);
  CHECK(default_matching_bound(StructureMode::TripartiteA, 3, 1) == 900);
}
