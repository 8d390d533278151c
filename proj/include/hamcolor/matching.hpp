#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hamcolor/graph.hpp"

namespace hamcolor {

// Vertex-disjoint edges of a host graph, each stored with u < v, sorted.
using Matching = std::vector<Edge>;

// Maximum-cardinality matching of g, ignoring colors. With `limit`, the
// search stops as soon as the matching reaches that size.
Matching max_matching(const ColoredGraph& g,
                      std::size_t limit = std::numeric_limits<std::size_t>::max());

// True when `m` is a set of vertex-disjoint edges of g with the stated colors.
bool is_valid_matching(const ColoredGraph& g, const Matching& m);

// Designates an edge subgraph F of a host graph: either G[S] or G[A, B].
struct SubgraphSpec {
  enum class Kind { Induced, Between };
  Kind kind = Kind::Induced;
  VertexSet first;
  VertexSet second;  // Between only

  static SubgraphSpec induced(VertexSet s) { return {Kind::Induced, std::move(s), {}}; }
  static SubgraphSpec between(VertexSet a, VertexSet b) {
    return {Kind::Between, std::move(a), std::move(b)};
  }
  std::string describe() const;
};

// Edges of F in host-graph labels, canonical order. Throws OverlappingSides
// for a Between spec whose sides intersect.
std::vector<Edge> subgraph_edges(const ColoredGraph& g, const SubgraphSpec& f);

struct MatchingVerdict {
  bool holds = false;
  // When the predicate fails: a matching of exactly size s in host labels.
  Matching witness;
};

// F contains no matching of size s.
MatchingVerdict is_nearly_empty(const ColoredGraph& g, const SubgraphSpec& f, int s);
// F minus its k-colored edges contains no matching of size s.
MatchingVerdict is_nearly_monochromatic(const ColoredGraph& g, const SubgraphSpec& f, int s,
                                        Color k);

}  // namespace hamcolor
