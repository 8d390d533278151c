#include "hamcolor/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>

namespace hamcolor {

// ---------------------------------------------------------------------------
// HamiltonCycle

std::vector<Vertex> canonical_cycle_order(std::vector<Vertex> order) {
  auto zero = std::find(order.begin(), order.end(), 0);
  std::rotate(order.begin(), zero, order.end());
  if (order.size() >= 3 && order[1] > order.back()) {
    std::reverse(order.begin() + 1, order.end());
  }
  return order;
}

HamiltonCycle HamiltonCycle::from_sequence(const ColoredGraph& g, std::vector<Vertex> order) {
  const int n = g.n();
  if (n < 3) throw InvalidCycle("Hamilton cycles need at least 3 vertices");
  if (order.size() != static_cast<std::size_t>(n)) {
    throw InvalidCycle("cycle has " + std::to_string(order.size()) + " vertices, graph has " +
                       std::to_string(n));
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n) throw InvalidCycle("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw InvalidCycle("vertex " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
  HamiltonCycle h;
  h.counts_.assign(static_cast<std::size_t>(g.r()), 0);
  for (int i = 0; i < n; ++i) {
    Vertex a = order[i];
    Vertex b = order[(i + 1) % n];
    auto c = g.color(a, b);
    if (!c) {
      throw InvalidCycle("consecutive vertices " + std::to_string(a) + " " +
                         std::to_string(b) + " are not adjacent");
    }
    ++h.counts_[*c - 1];
    h.edges_.push_back({std::min(a, b), std::max(a, b), *c});
  }
  std::sort(h.edges_.begin(), h.edges_.end());
  h.order_ = canonical_cycle_order(std::move(order));
  return h;
}

bool HamiltonCycle::contains_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), u,
                             [](const Edge& e, Vertex x) { return e.u < x; });
  for (; it != edges_.end() && it->u == u; ++it) {
    if (it->v == v) return true;
  }
  return false;
}

std::string HamiltonCycle::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out << ' ';
    out << order_[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Bias

long long scaled_bias(const std::vector<int>& counts, int n) {
  long long r = static_cast<long long>(counts.size());
  long long best = 0;
  for (int c : counts) best = std::max(best, std::llabs(r * c - n));
  return best;
}

std::string BiasReport::bias_string() const {
  long long d = std::gcd(scaled, static_cast<long long>(r));
  if (d == 0) return "0";
  long long num = scaled / d;
  long long den = r / d;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

BiasReport color_bias(const ColoredGraph& g, const HamiltonCycle& h) {
  // Revalidate: h may have been built against a different graph.
  HamiltonCycle checked = HamiltonCycle::from_sequence(g, h.order());
  BiasReport report;
  report.counts = checked.counts();
  report.r = g.r();
  report.scaled = scaled_bias(report.counts, g.n());
  return report;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (bit(n) - 1); }

// Vertices strictly greater than v.
Mask above(int v) { return v >= 63 ? 0 : ~(bit(v + 1) - 1); }

struct DenseGraph {
  int n = 0;
  std::vector<Mask> adj;
  std::vector<int> color;  // n*n, 0 when absent

  explicit DenseGraph(const ColoredGraph& g) : n(g.n()), adj(g.n(), 0), color(g.n() * g.n(), 0) {
    for (const Edge& e : g.edges()) {
      adj[e.u] |= bit(e.v);
      adj[e.v] |= bit(e.u);
      color[e.u * n + e.v] = color[e.v * n + e.u] = e.color;
    }
  }
  int c(int u, int v) const { return color[u * n + v]; }
};

void require_enumerable(const ColoredGraph& g) {
  if (g.n() < 3) throw ParameterError("Hamilton cycle search needs n >= 3");
  if (g.n() > 64) throw ParameterError("Hamilton cycle search supports n <= 64");
}

class CycleSearch {
 public:
  CycleSearch(const ColoredGraph& g, const RawCycleVisitor& visit,
              const EnumerationOptions& options)
      : dense_(g),
        n_(g.n()),
        all_(full_mask(g.n())),
        visit_(visit),
        options_(options),
        path_(g.n(), 0),
        counts_(g.r(), 0) {}

  EnumerationStats run() {
    path_[0] = 0;
    dfs(1, 0, bit(0));
    return stats_;
  }

 private:
  bool feasible(Vertex cur, Mask remaining) const {
    // Some neighbor of 0 above path[1] must be left to close the cycle.
    if ((dense_.adj[0] & remaining & above(path_[1])) == 0) return false;
    Mask usable = remaining | bit(cur) | bit(0);
    for (Mask rest = remaining; rest; rest &= rest - 1) {
      int w = std::countr_zero(rest);
      if (std::popcount(dense_.adj[w] & usable) < 2) return false;
    }
    // All remaining vertices reachable from cur through remaining vertices.
    Mask reached = bit(cur);
    Mask frontier = bit(cur);
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= dense_.adj[std::countr_zero(f)];
      next &= remaining & ~reached;
      reached |= next;
      frontier = next;
    }
    return (reached & remaining) == remaining;
  }

  void dfs(int depth, Vertex cur, Mask visited) {
    if (++stats_.nodes > options_.node_budget) {
      throw BudgetExceeded("Hamilton cycle search exceeded " +
                           std::to_string(options_.node_budget) + " search nodes");
    }
    if (depth == n_) {
      if ((dense_.adj[cur] & bit(0)) && path_[1] < cur) {
        int c = dense_.c(cur, 0);
        ++counts_[c - 1];
        ++stats_.cycles;
        bool more = visit_(path_, counts_);
        --counts_[c - 1];
        if (!more || (options_.cap && stats_.cycles >= *options_.cap)) {
          stats_.stopped_early = true;
          stop_ = true;
        }
      }
      return;
    }
    Mask remaining = all_ & ~visited;
    if (depth >= 2 && !feasible(cur, remaining)) return;
    for (Mask cand = dense_.adj[cur] & remaining; cand; cand &= cand - 1) {
      int w = std::countr_zero(cand);
      if (depth == 1 && (dense_.adj[0] & remaining & above(w)) == 0) continue;
      path_[depth] = w;
      int c = dense_.c(cur, w);
      ++counts_[c - 1];
      dfs(depth + 1, w, visited | bit(w));
      --counts_[c - 1];
      if (stop_) return;
    }
  }

  DenseGraph dense_;
  int n_;
  Mask all_;
  const RawCycleVisitor& visit_;
  EnumerationOptions options_;
  std::vector<Vertex> path_;
  std::vector<int> counts_;
  EnumerationStats stats_;
  bool stop_ = false;
};

}  // namespace

EnumerationStats enumerate_hamilton_cycles_raw(const ColoredGraph& g,
                                               const RawCycleVisitor& visit,
                                               const EnumerationOptions& options) {
  require_enumerable(g);
  if (options.cap && *options.cap == 0) return {0, 0, true};
  return CycleSearch(g, visit, options).run();
}

EnumerationStats enumerate_hamilton_cycles(
    const ColoredGraph& g, const std::function<bool(const HamiltonCycle&)>& visit,
    const EnumerationOptions& options) {
  return enumerate_hamilton_cycles_raw(
      g,
      [&](const std::vector<Vertex>& order, const std::vector<int>&) {
        return visit(HamiltonCycle::from_sequence(g, order));
      },
      options);
}

std::vector<HamiltonCycle> all_hamilton_cycles(const ColoredGraph& g,
                                               const EnumerationOptions& options) {
  std::vector<HamiltonCycle> out;
  enumerate_hamilton_cycles(
      g,
      [&](const HamiltonCycle& h) {
        out.push_back(h);
        return true;
      },
      options);
  return out;
}

bool has_hamilton_cycle_dp(const ColoredGraph& g) {
  const int n = g.n();
  if (n < 3 || n > 22) throw ParameterError("subset dynamic program supports 3 <= n <= 22");
  DenseGraph dense(g);
  // reach[mask] = set of end vertices of paths from 0 covering exactly mask.
  // Only masks containing vertex 0 are used; index by mask >> 1.
  const std::uint32_t subsets = std::uint32_t{1} << (n - 1);
  std::vector<std::uint32_t> reach(subsets, 0);
  reach[0] = 1;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    std::uint32_t ends = reach[s];
    if (!ends) continue;
    std::uint32_t mask = (s << 1) | 1;
    for (int w = 1; w < n; ++w) {
      if (mask & (std::uint32_t{1} << w)) continue;
      if (static_cast<std::uint32_t>(dense.adj[w]) & ends) {
        reach[(mask | (std::uint32_t{1} << w)) >> 1] |= std::uint32_t{1} << w;
      }
    }
  }
  std::uint32_t ends = reach[subsets - 1];
  return (ends & static_cast<std::uint32_t>(dense.adj[0]) & ~std::uint32_t{1}) != 0;
}

BiasSpectrum bias_spectrum(const ColoredGraph& g, std::uint64_t node_budget) {
  require_enumerable(g);
  if (g.n() <= 22 && !has_hamilton_cycle_dp(g)) {
    throw NotHamiltonian("graph has no Hamilton cycle");
  }
  BiasSpectrum spectrum;
  EnumerationOptions options;
  options.node_budget = node_budget;
  const int n = g.n();
  auto stats = enumerate_hamilton_cycles_raw(
      g,
      [&](const std::vector<Vertex>& order, const std::vector<int>& counts) {
        long long s = scaled_bias(counts, n);
        if (spectrum.count == 0 || s < spectrum.min_scaled) {
          spectrum.min_scaled = s;
          spectrum.min_cycle = order;
        }
        if (spectrum.count == 0 || s > spectrum.max_scaled) {
          spectrum.max_scaled = s;
          spectrum.max_cycle = order;
        }
        ++spectrum.count;
        return true;
      },
      options);
  spectrum.nodes = stats.nodes;
  if (spectrum.count == 0) throw NotHamiltonian("graph has no Hamilton cycle");
  return spectrum;
}

// ---------------------------------------------------------------------------
// Path systems

PathSystem::PathSystem(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    e.color = 0;
  }
  std::sort(edges_.begin(), edges_.end());
}

PathSystem PathSystem::path(const std::vector<Vertex>& vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    edges.push_back({vertices[i], vertices[i + 1], 0});
  }
  return PathSystem(std::move(edges));
}

void PathSystem::validate(const ColoredGraph& g) const {
  const int n = g.n();
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    std::string name = std::to_string(e.u) + " " + std::to_string(e.v);
    if (e.u < 0 || e.v >= n || e.u == e.v) {
      throw NotALinearForest("edge " + name + " is not a valid vertex pair");
    }
    if (!g.has_edge(e.u, e.v)) throw NotALinearForest("edge " + name + " not in graph");
    if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v) {
      throw NotALinearForest("edge " + name + " repeated");
    }
    if (++degree[e.u] > 2 || ++degree[e.v] > 2) {
      throw NotALinearForest("a vertex of edge " + name + " has degree above 2");
    }
    int a = find(e.u);
    int b = find(e.v);
    if (a == b) throw NotALinearForest("edge " + name + " closes a cycle");
    parent[a] = b;
  }
}

bool extension_guaranteed(const ColoredGraph& g, const PathSystem& l) {
  // 2 delta >= n + |E(L)| + 1
  return 2LL * min_degree(g) >= static_cast<long long>(g.n()) +
                                    static_cast<long long>(l.size()) + 1;
}

// ---------------------------------------------------------------------------
// Extension

namespace {

class ForcedEdges {
 public:
  ForcedEdges(int n, const PathSystem& l) : partners_(static_cast<std::size_t>(n)) {
    for (const Edge& e : l.edges()) {
      partners_[e.u].push_back(e.v);
      partners_[e.v].push_back(e.u);
    }
  }
  bool is_forced(Vertex a, Vertex b) const {
    const auto& p = partners_[a];
    return std::find(p.begin(), p.end(), b) != p.end();
  }
  int degree(Vertex v) const { return static_cast<int>(partners_[v].size()); }
  const std::vector<Vertex>& partners(Vertex v) const { return partners_[v]; }

  // The path of L through v, starting at `start` (an endpoint of it).
  std::vector<Vertex> segment_from(Vertex start) const {
    std::vector<Vertex> seg{start};
    Vertex prev = -1;
    Vertex cur = start;
    while (true) {
      Vertex next = -1;
      for (Vertex p : partners_[cur]) {
        if (p != prev) next = p;
      }
      if (next == -1) break;
      seg.push_back(next);
      prev = cur;
      cur = next;
    }
    return seg;
  }

  // An endpoint of the L-path containing v.
  Vertex endpoint_of(Vertex v) const {
    Vertex prev = -1;
    Vertex cur = v;
    while (true) {
      Vertex next = -1;
      for (Vertex p : partners_[cur]) {
        if (p != prev) {
          next = p;
          break;
        }
      }
      if (next == -1) return cur;
      prev = cur;
      cur = next;
    }
  }

 private:
  std::vector<std::vector<Vertex>> partners_;
};

// Pósa rotation-extension over a path that is always a concatenation of whole
// L-paths; rotations never break an edge of L.
class RotationExtender {
 public:
  RotationExtender(const ColoredGraph& g, const ForcedEdges& forced, std::uint32_t seed)
      : g_(g), forced_(forced), rng_(seed), pos_(static_cast<std::size_t>(g.n()), -1) {}

  std::optional<std::vector<Vertex>> run(std::uint64_t max_steps) {
    const int n = g_.n();
    path_.clear();
    std::fill(pos_.begin(), pos_.end(), -1);
    append_segment(forced_.endpoint_of(0));
    for (std::uint64_t step = 0; step < max_steps; ++step) {
      if (static_cast<int>(path_.size()) == n) {
        if (g_.has_edge(path_.front(), path_.back())) return path_;
      } else {
        if (extend_tail()) continue;
        reverse_all();
        if (extend_tail()) continue;
        if (open_cycle()) continue;
      }
      if (rng_() & 1) reverse_all();
      if (!rotate()) {
        reverse_all();
        if (!rotate()) return std::nullopt;
      }
    }
    return std::nullopt;
  }

 private:
  bool is_segment_end(Vertex v) const { return forced_.degree(v) <= 1; }

  void append_segment(Vertex start) {
    for (Vertex v : forced_.segment_from(start)) {
      pos_[v] = static_cast<int>(path_.size());
      path_.push_back(v);
    }
  }

  void reindex(std::size_t from) {
    for (std::size_t i = from; i < path_.size(); ++i) pos_[path_[i]] = static_cast<int>(i);
  }

  void reverse_all() {
    std::reverse(path_.begin(), path_.end());
    reindex(0);
  }

  bool extend_tail() {
    for (const auto& nb : g_.neighbors(path_.back())) {
      if (pos_[nb.vertex] == -1 && is_segment_end(nb.vertex)) {
        append_segment(nb.vertex);
        return true;
      }
    }
    return false;
  }

  // If the path closes into a cycle, reopen it next to a vertex with an
  // outside neighbor and extend.
  bool open_cycle() {
    const int len = static_cast<int>(path_.size());
    if (len < 3 || !g_.has_edge(path_.front(), path_.back())) return false;
    for (int i = 0; i < len; ++i) {
      Vertex p = path_[i];
      for (const auto& nb : g_.neighbors(p)) {
        if (pos_[nb.vertex] != -1 || !is_segment_end(nb.vertex)) continue;
        Vertex succ = path_[(i + 1) % len];
        Vertex pred = path_[(i + len - 1) % len];
        std::vector<Vertex> cycle_path;
        if (!forced_.is_forced(p, succ)) {
          for (int j = 1; j <= len; ++j) cycle_path.push_back(path_[(i + j) % len]);
        } else if (!forced_.is_forced(pred, p)) {
          for (int j = 1; j <= len; ++j) cycle_path.push_back(path_[(i - j + 2 * len) % len]);
          // Ends at path_[i - len] == p.
        } else {
          continue;
        }
        path_ = std::move(cycle_path);
        reindex(0);
        append_segment(nb.vertex);
        return true;
      }
    }
    return false;
  }

  bool rotate() {
    const int len = static_cast<int>(path_.size());
    Vertex tail = path_.back();
    std::vector<int> options;
    for (const auto& nb : g_.neighbors(tail)) {
      int i = pos_[nb.vertex];
      if (i < 0 || i >= len - 2) continue;
      if (forced_.is_forced(path_[i], path_[i + 1])) continue;
      options.push_back(i);
    }
    if (options.empty()) return false;
    int i = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng_)];
    std::reverse(path_.begin() + i + 1, path_.end());
    reindex(static_cast<std::size_t>(i + 1));
    return true;
  }

  const ColoredGraph& g_;
  const ForcedEdges& forced_;
  std::mt19937 rng_;
  std::vector<Vertex> path_;
  std::vector<int> pos_;
};

// Backtracking from vertex 0 that follows L edges whenever one is pending.
class ForcedCycleSearch {
 public:
  ForcedCycleSearch(const ColoredGraph& g, const ForcedEdges& forced, std::uint64_t budget)
      : dense_(g), forced_(forced), n_(g.n()), budget_(budget), path_(g.n(), 0) {}

  std::optional<std::vector<Vertex>> run() {
    path_[0] = 0;
    if (dfs(1, 0, bit(0))) return path_;
    return std::nullopt;
  }

 private:
  bool closes(Vertex last) const {
    if (!(dense_.adj[last] & bit(0))) return false;
    // Every L edge at 0 must be one of its two cycle edges.
    for (Vertex p : forced_.partners(0)) {
      if (p != path_[1] && p != last) return false;
    }
    return true;
  }

  bool dfs(int depth, Vertex cur, Mask visited) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("forced Hamilton cycle search exceeded budget");
    }
    if (depth == n_) return closes(cur);
    Vertex pred = depth >= 2 ? path_[depth - 2] : -1;
    Mask pending = 0;
    for (Vertex p : forced_.partners(cur)) {
      if (p == pred) continue;
      if (visited & bit(p)) return false;  // would have to close early
      pending |= bit(p);
    }
    Mask candidates = pending ? pending : (dense_.adj[cur] & ~visited & full_mask(n_));
    for (; candidates; candidates &= candidates - 1) {
      int w = std::countr_zero(candidates);
      // Entering w by a free edge uses one of its two cycle slots.
      if (!pending && forced_.degree(w) >= 2) continue;
      path_[depth] = w;
      if (dfs(depth + 1, w, visited | bit(w))) return true;
    }
    return false;
  }

  DenseGraph dense_;
  const ForcedEdges& forced_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> path_;
};

bool contains_all(const HamiltonCycle& h, const PathSystem& l) {
  return std::all_of(l.edges().begin(), l.edges().end(),
                     [&](const Edge& e) { return h.contains_edge(e.u, e.v); });
}

}  // namespace

HamiltonCycle extend_to_hamilton(const ColoredGraph& g, const PathSystem& l,
                                 const ExtensionOptions& options) {
  l.validate(g);
  const int n = g.n();
  if (n < 3) throw NoExtensionFound("Hamilton cycles need at least 3 vertices");
  ForcedEdges forced(n, l);
  std::uint64_t steps = options.max_rotation_steps
                            ? options.max_rotation_steps
                            : 200ULL * static_cast<std::uint64_t>(n) * n + 1000;
  RotationExtender extender(g, forced, options.seed);
  if (auto path = extender.run(steps)) {
    HamiltonCycle h = HamiltonCycle::from_sequence(g, *path);
    if (!contains_all(h, l)) throw std::logic_error("rotation-extension dropped an L edge");
    return h;
  }
  if (n <= std::min(options.exhaustive_max_n, 64)) {
    ForcedCycleSearch search(g, forced, options.exhaustive_node_budget);
    std::optional<std::vector<Vertex>> path;
    try {
      path = search.run();
    } catch (const BudgetExceeded&) {
      throw NoExtensionFound("exhaustive search budget exhausted");
    }
    if (path) {
      HamiltonCycle h = HamiltonCycle::from_sequence(g, *path);
      if (!contains_all(h, l)) throw std::logic_error("forced search dropped an L edge");
      return h;
    }
    throw NoExtensionFound("no Hamilton cycle contains the path system");
  }
  throw NoExtensionFound("rotation-extension failed and n is too large for exhaustive search");
}

}  // namespace hamcolor
