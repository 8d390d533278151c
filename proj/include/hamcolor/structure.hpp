#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hamcolor/graph.hpp"
#include "hamcolor/matching.hpp"

namespace hamcolor {

// Colored neighborhood of a vertex: L(v) and the classes N^k(v).
struct NeighborhoodProfile {
  Vertex v = 0;
  std::vector<Color> colors;        // L(v), ascending
  std::vector<VertexSet> by_color;  // by_color[k] = N^k(v); index 0 unused

  const VertexSet& with_color(Color k) const { return by_color.at(static_cast<std::size_t>(k)); }
  VertexSet without_color(Color k) const;  // N^{!=k}(v)
  VertexSet all() const;                   // N(v)
  bool has_color(Color k) const;
};

NeighborhoodProfile neighborhood_profile(const ColoredGraph& g, Vertex v);

// Edges of the bipartite graph N^{k,l}(v) between N^k(v) and N^l(v).
std::vector<Edge> cross_edges(const ColoredGraph& g, const NeighborhoodProfile& p, Color k,
                              Color l);

// Pattern of a triangle v-u-w seen from the center v.
//   a(j,k,l): {chi(vu), chi(vw)} = {j,k}, j < k, chi(uw) = l distinct from both
//   b(k,l):   chi(vu) = chi(vw) = k, chi(uw) = l != k
//   c(k):     all three equal k, or {chi(vu), chi(vw)} = {k,l} with chi(uw) = l
struct TriangleEdgeType {
  enum class Kind { A, B, C };
  Kind kind = Kind::C;
  Color first = 0;   // a: j   b: k   c: k
  Color second = 0;  // a: k   b: l
  Color third = 0;   // a: l

  std::string to_string() const;
  friend bool operator==(const TriangleEdgeType&, const TriangleEdgeType&) = default;
};

// Throws NotATriangle unless vu, vw, uw are all edges.
TriangleEdgeType triangle_edge_type(const ColoredGraph& g, Vertex v, Vertex u, Vertex w);

// A(j,k,l): L(v) = {j,k} (j < k), N^j and N^k independent, every edge of
// G[N^j u N^k] colored l.
struct TypeA {
  Color j = 0;
  Color k = 0;
  Color l = 0;
  friend bool operator==(const TypeA&, const TypeA&) = default;
  friend auto operator<=>(const TypeA&, const TypeA&) = default;
};
// L(v) = {incident_color} and every edge inside that neighborhood has
// hub_color (hub_color != incident_color). In the dominant-color structure
// the hub color is the dominant one.
struct TypeB {
  Color incident_color = 0;
  Color hub_color = 0;
  friend bool operator==(const TypeB&, const TypeB&) = default;
  friend auto operator<=>(const TypeB&, const TypeB&) = default;
};
// C(k): G[N^k] is k-colored, N^{!=k} independent, and every N^{k,l} is
// monochromatic in l.
struct TypeC {
  Color k = 0;
  friend bool operator==(const TypeC&, const TypeC&) = default;
  friend auto operator<=>(const TypeC&, const TypeC&) = default;
};

using VertexLabel = std::variant<TypeA, TypeB, TypeC>;

std::string label_to_string(const VertexLabel& label);

// Literal checks of the three definitions.
bool satisfies_type_a(const ColoredGraph& g, const NeighborhoodProfile& p, const TypeA& a);
bool satisfies_type_b(const ColoredGraph& g, const NeighborhoodProfile& p, const TypeB& b);
bool satisfies_type_c(const ColoredGraph& g, const NeighborhoodProfile& p, const TypeC& c);
bool satisfies(const ColoredGraph& g, const NeighborhoodProfile& p, const VertexLabel& label);

struct VertexType {
  enum class Status { Classified, Vacuous, Unclassified };
  Status status = Status::Unclassified;
  // Classified: the type. Vacuous: canonical pick among `consistent`.
  std::optional<VertexLabel> label;
  // Every label whose definition holds for the vertex.
  std::vector<VertexLabel> consistent;
  std::string reason;          // Unclassified / Vacuous explanation
  std::vector<Edge> evidence;  // offending neighborhood edges

  std::string to_string() const;
};

VertexType classify_vertex(const ColoredGraph& g, Vertex v);

enum class StructureMode { DominantColor, TripartiteA, Inconclusive };

std::string mode_name(StructureMode mode);

struct DichotomyReport {
  StructureMode mode = StructureMode::Inconclusive;
  Color k = 0;  // DominantColor only
  std::vector<VertexType> types;
  std::vector<Vertex> nonconforming;
  // Filled when the mode is Inconclusive: whether the input actually had a
  // bad bowtie (violating the precondition).
  std::optional<bool> has_bad_bowtie;
};

DichotomyReport global_dichotomy(const ColoredGraph& g);

struct ConditionResult {
  std::string name;
  bool pass = false;
  Matching witness;  // size s, host labels, when failing
};

// Partition V_1..V_r (parts[i] is V_{i+1}) with its provenance.
struct StructureCertificate {
  StructureMode mode = StructureMode::Inconclusive;
  Color k = 0;
  int r = 0;
  int m = 1;
  std::vector<VertexSet> parts;
  std::vector<VertexSet> classes;      // originating type class per part
  std::vector<std::string> class_names;
  std::vector<VertexSet> slack;        // W_i = V_i \ class_i
  std::vector<std::size_t> symmetric_differences;
  std::vector<std::string> ideal_sizes;  // exact rationals
  std::vector<std::size_t> realized_sizes;
  VertexSet exceptional;  // V0
  VertexSet wildcards;    // residual vertices with vacuous neighborhoods
  // Reported for diagnostics, never enforced.
  std::vector<long long> symmetric_difference_bounds;
  long long neighborhood_matching_threshold = 0;  // 6 r^2 m - 5 r m
  long long path_edge_budget = 0;                 // 12 r^2 m - 1
};

// Targets: DominantColor |V_k| = (r+1)n/2r and n/2r otherwise; TripartiteA
// n/3 each. Non-integral targets are rounded to nearest integers summing to n.
// `residual` must be the induced subgraph of g on V(g) \ removed. Throws
// ModeInconclusive or TargetsInfeasible.
StructureCertificate recover_partition(const ColoredGraph& g, const ColoredGraph& residual,
                                       const VertexSet& removed, int m);
// Same, reusing an already computed dichotomy of `residual`.
StructureCertificate recover_partition(const ColoredGraph& g, const ColoredGraph& residual,
                                       const VertexSet& removed, int m,
                                       const DichotomyReport& dichotomy);

struct CertificateVerdict {
  int s = 0;
  std::vector<ConditionResult> conditions;
  bool pass() const;
};

// 100 r^2 m, or 900 m for the tripartite mode.
long long default_matching_bound(StructureMode mode, int r, int m);

// Throws NotAPartition unless the parts partition V(g).
CertificateVerdict check_certificate(const ColoredGraph& g, const StructureCertificate& cert,
                                     int s);

}  // namespace hamcolor
