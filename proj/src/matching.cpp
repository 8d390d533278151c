#include "hamcolor/matching.hpp"

#include <algorithm>
#include <queue>

namespace hamcolor {

namespace {

// Edmonds' blossom algorithm on an uncolored adjacency list. Vertices whose
// exposed search fails once are never retried (they stay exposed in every
// maximum matching that extends the current one).
class Blossom {
 public:
  explicit Blossom(std::vector<std::vector<Vertex>> adj)
      : n_(static_cast<int>(adj.size())),
        adj_(std::move(adj)),
        match_(n_, -1),
        parent_(n_, -1),
        base_(n_),
        used_(n_, 0),
        in_blossom_(n_, 0) {}

  std::vector<Vertex> run(std::size_t limit) {
    std::size_t size = 0;
    // Greedy start in increasing vertex order.
    for (Vertex v = 0; v < n_ && size < limit; ++v) {
      if (match_[v] != -1) continue;
      for (Vertex u : adj_[v]) {
        if (match_[u] == -1) {
          match_[u] = v;
          match_[v] = u;
          ++size;
          break;
        }
      }
    }
    for (Vertex v = 0; v < n_ && size < limit; ++v) {
      if (match_[v] != -1) continue;
      Vertex u = find_path(v);
      if (u == -1) continue;
      while (u != -1) {
        Vertex pu = parent_[u];
        Vertex next = match_[pu];
        match_[u] = pu;
        match_[pu] = u;
        u = next;
      }
      ++size;
    }
    return match_;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      for (Vertex to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          Vertex mate = match_[to];
          used_[mate] = 1;
          queue.push(mate);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

Matching matching_on_edges(const ColoredGraph& g, const std::vector<Edge>& edges,
                           std::size_t limit) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(g.n()));
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  std::vector<Vertex> mate = Blossom(std::move(adj)).run(limit);
  Matching out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (mate[v] > v) out.push_back({v, mate[v], g.color_of(v, mate[v])});
  }
  if (out.size() > limit) out.resize(limit);
  return out;
}

MatchingVerdict verdict_for(const ColoredGraph& g, const std::vector<Edge>& edges, int s) {
  if (s < 1) throw ParameterError("matching size s must be positive");
  Matching m = matching_on_edges(g, edges, static_cast<std::size_t>(s));
  if (m.size() >= static_cast<std::size_t>(s)) return {false, std::move(m)};
  return {true, {}};
}

std::string describe_set(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

Matching max_matching(const ColoredGraph& g, std::size_t limit) {
  return matching_on_edges(g, g.edges(), limit);
}

bool is_valid_matching(const ColoredGraph& g, const Matching& m) {
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  for (const Edge& e : m) {
    if (e.u < 0 || e.v < 0 || e.u >= g.n() || e.v >= g.n() || e.u == e.v) return false;
    auto c = g.color(e.u, e.v);
    if (!c || *c != e.color) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

std::string SubgraphSpec::describe() const {
  if (kind == Kind::Induced) return "G[" + describe_set(first) + "]";
  return "G[" + describe_set(first) + "," + describe_set(second) + "]";
}

std::vector<Edge> subgraph_edges(const ColoredGraph& g, const SubgraphSpec& f) {
  f.first.check_bounds(g.n());
  f.second.check_bounds(g.n());
  std::vector<char> side(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : f.first) side[v] = 1;
  if (f.kind == SubgraphSpec::Kind::Between) {
    for (Vertex v : f.second) {
      if (side[v]) throw OverlappingSides("sides share vertex " + std::to_string(v));
      side[v] = 2;
    }
  }
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!side[e.u] || !side[e.v]) continue;
    bool keep = f.kind == SubgraphSpec::Kind::Induced ? true : side[e.u] != side[e.v];
    if (keep) out.push_back(e);
  }
  return out;
}

MatchingVerdict is_nearly_empty(const ColoredGraph& g, const SubgraphSpec& f, int s) {
  return verdict_for(g, subgraph_edges(g, f), s);
}

MatchingVerdict is_nearly_monochromatic(const ColoredGraph& g, const SubgraphSpec& f, int s,
                                        Color k) {
  g.check_color(k);
  std::vector<Edge> edges = subgraph_edges(g, f);
  std::erase_if(edges, [k](const Edge& e) { return e.color == k; });
  return verdict_for(g, edges, s);
}

}  // namespace hamcolor
