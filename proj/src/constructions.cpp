#include "hamcolor/constructions.hpp"

#include <algorithm>

namespace hamcolor {

std::string construction_kind_name(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::GeneralR:
      return "general-r";
    case ConstructionKind::Tripartite3:
      return "tripartite3";
    case ConstructionKind::Counterexample2:
      return "counterexample2";
  }
  return "?";
}

ConstructionKind parse_construction_kind(const std::string& name) {
  for (auto kind : {ConstructionKind::GeneralR, ConstructionKind::Tripartite3,
                    ConstructionKind::Counterexample2}) {
    if (construction_kind_name(kind) == name) return kind;
  }
  throw ParameterError("unknown construction '" + name + "'");
}

const VertexSet& part(const Construction& c, const std::string& name) {
  auto it = std::find(c.part_names.begin(), c.part_names.end(), name);
  if (it == c.part_names.end()) throw ParameterError("no part named " + name);
  return c.parts[static_cast<std::size_t>(it - c.part_names.begin())];
}

namespace {

// Consecutive blocks of the given sizes.
std::vector<VertexSet> blocks(const std::vector<int>& sizes) {
  std::vector<VertexSet> out;
  Vertex next = 0;
  for (int s : sizes) {
    out.push_back(VertexSet::range(next, next + s));
    next += s;
  }
  return out;
}

void add_clique(std::vector<Edge>& edges, const VertexSet& s, Color c) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) edges.push_back({s[i], s[j], c});
  }
}

void add_biclique(std::vector<Edge>& edges, const VertexSet& a, const VertexSet& b, Color c) {
  for (Vertex u : a) {
    for (Vertex v : b) edges.push_back({std::min(u, v), std::max(u, v), c});
  }
}

Construction finish(ConstructionSpec spec, int n, int r, std::vector<Edge> edges,
                    std::vector<VertexSet> parts, std::vector<std::string> names, int nominal) {
  Construction c{spec, ColoredGraph(n, r, std::move(edges)), std::move(parts), std::move(names),
                 0, nominal};
  c.min_degree = min_degree(c.graph);
  return c;
}

}  // namespace

Construction build_general_r(int n, int r) {
  if (r < 2) throw ParameterError("general-r needs r >= 2");
  if (n <= 0 || n % (2 * r) != 0) {
    throw DivisibilityError("general-r needs 2r | n (n=" + std::to_string(n) +
                            ", r=" + std::to_string(r) + ")");
  }
  const int small = n / (2 * r);
  std::vector<int> sizes(static_cast<std::size_t>(r - 1), small);
  sizes.push_back(n - small * (r - 1));
  std::vector<VertexSet> parts = blocks(sizes);
  std::vector<std::string> names;
  std::vector<Edge> edges;
  const VertexSet& hub = parts.back();
  add_clique(edges, hub, r);
  for (int i = 0; i < r; ++i) {
    names.push_back("V" + std::to_string(i + 1));
    if (i < r - 1) add_biclique(edges, parts[i], hub, i + 1);
  }
  return finish({ConstructionKind::GeneralR, n, r, 0}, n, r, std::move(edges), std::move(parts),
                std::move(names), (r + 1) * n / (2 * r));
}

Construction build_tripartite_3(int n) {
  if (n <= 0 || n % 3 != 0) {
    throw DivisibilityError("tripartite3 needs 3 | n (n=" + std::to_string(n) + ")");
  }
  std::vector<VertexSet> parts = blocks({n / 3, n / 3, n / 3});
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) add_biclique(edges, parts[i], parts[j], 6 - (i + 1) - (j + 1));
  }
  return finish({ConstructionKind::Tripartite3, n, 3, 0}, n, 3, std::move(edges),
                std::move(parts), {"V1", "V2", "V3"}, 2 * n / 3);
}

Construction build_counterexample_2(int n, int t) {
  if (t < 1) throw ParameterError("counterexample2 needs t >= 1");
  if ((n - t) % 2 != 0) throw ParameterError("counterexample2 needs n - t even");
  if (n - t < 4) throw ParameterError("counterexample2 needs n - t >= 4");
  const int half = (n - t) / 2;
  std::vector<VertexSet> parts = blocks({t, half, half});
  std::vector<Edge> edges;
  add_clique(edges, parts[0].set_union(parts[2]), 1);
  add_clique(edges, parts[1], 2);
  add_biclique(edges, parts[0], parts[1], 2);
  return finish({ConstructionKind::Counterexample2, n, 2, t}, n, 2, std::move(edges),
                std::move(parts), {"V0", "V1", "V2"}, (n + t) / 2);
}

Construction build_construction(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::GeneralR:
      return build_general_r(spec.n, spec.r);
    case ConstructionKind::Tripartite3:
      return build_tripartite_3(spec.n);
    case ConstructionKind::Counterexample2:
      return build_counterexample_2(spec.n, spec.t);
  }
  throw ParameterError("unknown construction kind");
}

}  // namespace hamcolor
