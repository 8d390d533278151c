#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamcolor/errors.hpp"

namespace hamcolor {

// Vertices are 0..n-1, colors are 1..r.
using Vertex = int;
using Color = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts and removes duplicates.
  explicit VertexSet(std::vector<Vertex> vertices);
  VertexSet(std::initializer_list<Vertex> vertices)
      : VertexSet(std::vector<Vertex>(vertices)) {}

  static VertexSet range(Vertex first, Vertex last);  // [first, last)

  bool contains(Vertex v) const;
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Vertex>& items() const noexcept { return items_; }

  // Throws ValidationError unless every member lies in 0..n-1.
  void check_bounds(int n) const;

  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;
  VertexSet set_intersection(const VertexSet& other) const;
  std::size_t symmetric_difference_size(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> items_;
};

// Simple undirected graph with an r-coloring of its edges. Immutable once
// constructed; every constructor path validates.
class ColoredGraph {
 public:
  struct Neighbor {
    Vertex vertex;
    Color color;
  };

  ColoredGraph() : ColoredGraph(0, 1, {}) {}
  // Throws ValidationError on loops, duplicate edges, vertices outside
  // 0..n-1, colors outside 1..r, n < 0 or r < 1. Endpoint order is free.
  // n = 0 is legal here (empty induced subgraphs); load_graph rejects it.
  ColoredGraph(int n, int r, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Canonical order: (min endpoint, max endpoint), with u < v in each edge.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Sorted by neighbor index.
  std::span<const Neighbor> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex u, Vertex v) const { return color(u, v).has_value(); }
  std::optional<Color> color(Vertex u, Vertex v) const;
  // Same as color() but throws ValidationError when uv is not an edge.
  Color color_of(Vertex u, Vertex v) const;

  void check_vertex(Vertex v) const;
  void check_color(Color k) const;  // throws ColorOutOfRange

 private:
  int n_;
  int r_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

struct Subgraph {
  ColoredGraph graph;
  // to_parent[i] is the vertex of the host graph that became vertex i.
  std::vector<Vertex> to_parent;
};

struct BipartiteSubgraph {
  ColoredGraph graph;
  std::vector<Vertex> to_parent;
  // Sides in local indices.
  VertexSet side_a;
  VertexSet side_b;
};

ColoredGraph load_graph(std::string_view text);
std::string save_graph(const ColoredGraph& g);

int min_degree(const ColoredGraph& g);
std::vector<Edge> color_class(const ColoredGraph& g, Color k);

// Vertices of S relabeled 0..|S|-1 in increasing order.
Subgraph induced_subgraph(const ColoredGraph& g, const VertexSet& s);
// Local labels: A first (ascending), then B (ascending). Throws
// OverlappingSides when A and B intersect.
BipartiteSubgraph bipartite_between(const ColoredGraph& g, const VertexSet& a,
                                    const VertexSet& b);

}  // namespace hamcolor
