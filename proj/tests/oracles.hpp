#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hamcolor/bowtie.hpp"
#include "hamcolor/graph.hpp"
#include "hamcolor/hamilton.hpp"

namespace oracle {

using hamcolor::Bowtie;
using hamcolor::Color;
using hamcolor::ColoredGraph;
using hamcolor::Edge;
using hamcolor::Vertex;

// Each pair present with probability p, uniform color.
inline ColoredGraph random_graph(std::mt19937_64& rng, int n, int r, double p) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Color> color(1, r);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v, color(rng)});
    }
  }
  return ColoredGraph(n, r, std::move(edges));
}

// Largest set of pairwise disjoint edges, by include/exclude over every edge.
inline std::size_t max_matching_size(const ColoredGraph& g) {
  const auto& edges = g.edges();
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t i, std::size_t size) -> void {
    if (size + (edges.size() - i) <= best) return;
    if (i == edges.size()) {
      best = std::max(best, size);
      return;
    }
    const Edge& e = edges[i];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      self(self, i + 1, size + 1);
      used[e.u] = used[e.v] = 0;
    }
    self(self, i + 1, size);
  };
  rec(rec, 0, 0);
  return best;
}

// Every Hamilton cycle as a canonical vertex sequence, via all permutations
// of 1..n-1 kept when the second vertex is below the last.
inline std::set<std::vector<Vertex>> hamilton_cycles(const ColoredGraph& g) {
  std::set<std::vector<Vertex>> out;
  const int n = g.n();
  if (n < 3) return out;
  std::vector<Vertex> rest;
  for (Vertex v = 1; v < n; ++v) rest.push_back(v);
  do {
    if (rest.front() > rest.back()) continue;
    std::vector<Vertex> order{0};
    order.insert(order.end(), rest.begin(), rest.end());
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = g.has_edge(order[i], order[(i + 1) % n]);
    if (ok) out.insert(order);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

inline std::vector<int> cycle_counts(const ColoredGraph& g, const std::vector<Vertex>& order) {
  std::vector<int> counts(static_cast<std::size_t>(g.r()), 0);
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) ++counts[g.color_of(order[i], order[(i + 1) % n]) - 1];
  return counts;
}

// Bowties as canonical labelings, from all ordered 5-tuples of distinct
// vertices carrying the six edges.
inline std::set<Bowtie> bowties(const ColoredGraph& g) {
  std::set<Bowtie> out;
  const int n = g.n();
  std::array<Vertex, 5> t{};
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == 5) {
      if (g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[0], t[3]) &&
          g.has_edge(t[0], t[4]) && g.has_edge(t[1], t[2]) && g.has_edge(t[3], t[4])) {
        out.insert(Bowtie{t}.canonical());
      }
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (std::find(t.begin(), t.begin() + depth, v) != t.begin() + depth) continue;
      t[depth] = v;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Not bad iff the positive and negative edge color multisets agree.
inline bool bowtie_is_bad(const ColoredGraph& g, const Bowtie& b) {
  const auto& v = b.v;
  std::multiset<Color> plus{g.color_of(v[0], v[1]), g.color_of(v[0], v[2]),
                            g.color_of(v[3], v[4])};
  std::multiset<Color> minus{g.color_of(v[0], v[3]), g.color_of(v[0], v[4]),
                             g.color_of(v[1], v[2])};
  return plus != minus;
}

// True when `order` visits every vertex once and consecutive vertices
// (cyclically) are adjacent.
inline bool is_hamilton_cycle(const ColoredGraph& g, const std::vector<Vertex>& order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n || n < 3) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (!g.has_edge(order[i], order[(i + 1) % n])) return false;
  }
  return true;
}

// Random linear forest of at most `max_edges` edges of g.
inline std::vector<Edge> random_linear_forest(std::mt19937_64& rng, const ColoredGraph& g,
                                              int max_edges) {
  std::vector<Edge> pool = g.edges();
  std::shuffle(pool.begin(), pool.end(), rng);
  std::uniform_int_distribution<int> want_dist(0, max_edges);
  const int want = want_dist(rng);
  std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> comp(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) comp[i] = i;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  std::vector<Edge> out;
  for (const Edge& e : pool) {
    if (static_cast<int>(out.size()) >= want) break;
    if (deg[e.u] >= 2 || deg[e.v] >= 2 || find(e.u) == find(e.v)) continue;
    comp[find(e.u)] = find(e.v);
    ++deg[e.u];
    ++deg[e.v];
    out.push_back(e);
  }
  return out;
}

}  // namespace oracle
