#include "hamcolor/bowtie.hpp"

#include <algorithm>
#include <sstream>

namespace hamcolor {

Bowtie Bowtie::canonical() const {
  std::array<Vertex, 2> a{v[1], v[2]};
  std::array<Vertex, 2> b{v[3], v[4]};
  if (a[0] > a[1]) std::swap(a[0], a[1]);
  if (b[0] > b[1]) std::swap(b[0], b[1]);
  if (b < a) std::swap(a, b);
  return {{v[0], a[0], a[1], b[0], b[1]}};
}

std::string Bowtie::to_string() const {
  std::ostringstream out;
  out << v[0] << ' ' << v[1] << ' ' << v[2] << ' ' << v[3] << ' ' << v[4];
  return out.str();
}

void validate_bowtie(const ColoredGraph& g, const Bowtie& b) {
  for (int i = 0; i < 5; ++i) {
    if (b.v[i] < 0 || b.v[i] >= g.n()) {
      throw InvalidBowtie("bowtie " + b.to_string() + ": vertex out of range");
    }
    for (int j = 0; j < i; ++j) {
      if (b.v[i] == b.v[j]) throw InvalidBowtie("bowtie " + b.to_string() + ": repeated vertex");
    }
  }
  static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}};
  for (const auto& p : kPairs) {
    if (!g.has_edge(b.v[p[0]], b.v[p[1]])) {
      throw InvalidBowtie("bowtie " + b.to_string() + ": missing edge " +
                          std::to_string(b.v[p[0]]) + " " + std::to_string(b.v[p[1]]));
    }
  }
}

namespace {

// Colors of the positive edges v1v2, v1v3, v4v5 and the negative edges
// v1v4, v1v5, v2v3.
struct BowtieColors {
  std::array<Color, 3> plus;
  std::array<Color, 3> minus;
};

BowtieColors colors_of(const ColoredGraph& g, const Bowtie& b) {
  const auto& v = b.v;
  return {{g.color_of(v[0], v[1]), g.color_of(v[0], v[2]), g.color_of(v[3], v[4])},
          {g.color_of(v[0], v[3]), g.color_of(v[0], v[4]), g.color_of(v[1], v[2])}};
}

int f_from(const BowtieColors& c, Color k) {
  int f = 0;
  for (Color x : c.plus) f += x == k;
  for (Color x : c.minus) f -= x == k;
  return f;
}

}  // namespace

int color_count_f(const ColoredGraph& g, const Bowtie& b, Color k) {
  g.check_color(k);
  validate_bowtie(g, b);
  return f_from(colors_of(g, b), k);
}

std::optional<Color> bad_color(const ColoredGraph& g, const Bowtie& b) {
  validate_bowtie(g, b);
  BowtieColors c = colors_of(g, b);
  // Only colors on the bowtie can have f != 0.
  std::optional<Color> best;
  for (Color k : c.plus) {
    if (f_from(c, k) != 0 && (!best || k < *best)) best = k;
  }
  for (Color k : c.minus) {
    if (f_from(c, k) != 0 && (!best || k < *best)) best = k;
  }
  return best;
}

namespace {

// Edges of G[N(center)] restricted to allowed vertices, sorted.
std::vector<std::pair<Vertex, Vertex>> wing_edges(const ColoredGraph& g, Vertex center,
                                                  const std::vector<char>* blocked) {
  std::vector<Vertex> nbrs;
  for (const auto& nb : g.neighbors(center)) {
    if (!blocked || !(*blocked)[nb.vertex]) nbrs.push_back(nb.vertex);
  }
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (g.has_edge(nbrs[i], nbrs[j])) out.emplace_back(nbrs[i], nbrs[j]);
    }
  }
  return out;
}

bool disjoint(const std::pair<Vertex, Vertex>& a, const std::pair<Vertex, Vertex>& b) {
  return a.first != b.first && a.first != b.second && a.second != b.first &&
         a.second != b.second;
}

}  // namespace

void enumerate_bowties(const ColoredGraph& g, const std::function<bool(const Bowtie&)>& visit,
                       const BowtieEnumerationOptions& options) {
  std::size_t emitted = 0;
  if (options.cap && *options.cap == 0) return;
  for (Vertex c = 0; c < g.n(); ++c) {
    auto wings = wing_edges(g, c, nullptr);
    for (std::size_t i = 0; i < wings.size(); ++i) {
      for (std::size_t j = i + 1; j < wings.size(); ++j) {
        if (!disjoint(wings[i], wings[j])) continue;
        Bowtie b{{c, wings[i].first, wings[i].second, wings[j].first, wings[j].second}};
        if (options.only_bad && !is_bad(g, b)) continue;
        if (!visit(b)) return;
        if (options.cap && ++emitted >= *options.cap) return;
      }
    }
  }
}

std::vector<Bowtie> list_bowties(const ColoredGraph& g, const BowtieEnumerationOptions& options) {
  std::vector<Bowtie> out;
  enumerate_bowties(
      g,
      [&](const Bowtie& b) {
        out.push_back(b);
        return true;
      },
      options);
  return out;
}

bool has_bad_bowtie(const ColoredGraph& g) {
  bool found = false;
  enumerate_bowties(
      g,
      [&](const Bowtie&) {
        found = true;
        return false;
      },
      {true, std::nullopt});
  return found;
}

BowtiePacking greedy_disjoint_bad_packing(const ColoredGraph& g) {
  // Bowties touching a covered vertex are rejected by first-fit anyway, so
  // covered vertices are skipped during the scan; once a center is covered
  // all later bowties at that center are rejected too.
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  BowtiePacking packing;
  std::vector<Vertex> covered;
  for (Vertex c = 0; c < g.n(); ++c) {
    if (used[c]) continue;
    bool taken = false;
    auto wings = wing_edges(g, c, &used);
    for (std::size_t i = 0; i < wings.size() && !taken; ++i) {
      if (used[wings[i].first] || used[wings[i].second]) continue;
      for (std::size_t j = i + 1; j < wings.size() && !taken; ++j) {
        if (!disjoint(wings[i], wings[j])) continue;
        if (used[wings[j].first] || used[wings[j].second]) continue;
        Bowtie b{{c, wings[i].first, wings[i].second, wings[j].first, wings[j].second}};
        if (!is_bad(g, b)) continue;
        packing.bowties.push_back(b);
        for (Vertex v : b.v) {
          used[v] = 1;
          covered.push_back(v);
        }
        taken = true;
      }
    }
  }
  packing.covered = VertexSet(std::move(covered));
  return packing;
}

StripResult strip_bad_bowties(const ColoredGraph& g) {
  BowtiePacking packing = greedy_disjoint_bad_packing(g);
  VertexSet keep = VertexSet::range(0, g.n()).set_difference(packing.covered);
  Subgraph sub = induced_subgraph(g, keep);
  StripResult result{std::move(sub.graph), std::move(sub.to_parent), packing.covered,
                     std::move(packing), false};
  result.residual_clean = !has_bad_bowtie(result.residual);
  if (!result.residual_clean) {
    throw std::logic_error("greedy packing is not maximal: residual has a bad bowtie");
  }
  return result;
}

namespace {

// Rebuilds a cyclic vertex order from an edge set in which every vertex has
// degree exactly 2. Returns nullopt unless the edges form one n-cycle.
std::optional<std::vector<Vertex>> cycle_from_edges(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const auto& a : adj) {
    if (a.size() != 2) return std::nullopt;
  }
  std::vector<Vertex> order{0};
  Vertex prev = 0;
  Vertex cur = adj[0][0];
  while (cur != 0) {
    if (static_cast<int>(order.size()) >= n) return std::nullopt;
    order.push_back(cur);
    Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

}  // namespace

SwapResult amplifier_swap(const ColoredGraph& g, const std::vector<Bowtie>& bowties, Color k,
                          const ExtensionOptions& options) {
  g.check_color(k);
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  SwapResult result{HamiltonCycle{}, HamiltonCycle{}, {}, {}, 0, 0};
  std::vector<Edge> l1;
  std::vector<Edge> l2;
  for (const Bowtie& raw : bowties) {
    validate_bowtie(g, raw);
    for (Vertex v : raw.v) {
      if (used[v]) {
        throw NotDisjoint("bowtie " + raw.to_string() + " shares vertex " + std::to_string(v));
      }
      used[v] = 1;
    }
    int f = color_count_f(g, raw, k);
    if (f == 0) {
      throw NotKBad("bowtie " + raw.to_string() + " is not " + std::to_string(k) + "-bad");
    }
    Bowtie b = f > 0 ? raw : raw.swapped_wings();
    f = std::abs(f);
    const auto& v = b.v;
    l1.push_back({v[0], v[1], 0});
    l1.push_back({v[0], v[2], 0});
    l1.push_back({v[3], v[4], 0});
    l2.push_back({v[1], v[2], 0});
    l2.push_back({v[0], v[3], 0});
    l2.push_back({v[0], v[4], 0});
    result.oriented.push_back(b);
    result.f_values.push_back(f);
    result.sum_f += f;
  }
  PathSystem first(l1);
  result.h1 = extend_to_hamilton(g, first, options);

  std::vector<Edge> edges;
  for (const Edge& e : result.h1.edges()) {
    bool in_l1 = std::any_of(first.edges().begin(), first.edges().end(),
                             [&](const Edge& x) { return x.u == e.u && x.v == e.v; });
    if (!in_l1) edges.push_back(e);
  }
  edges.insert(edges.end(), l2.begin(), l2.end());
  auto order = cycle_from_edges(g.n(), edges);
  if (!order) throw std::logic_error("swapping L1 for L2 did not yield a Hamilton cycle");
  result.h2 = HamiltonCycle::from_sequence(g, *order);
  result.delta = result.h1.count(k) - result.h2.count(k);
  if (result.delta != result.sum_f) {
    throw std::logic_error("swap delta " + std::to_string(result.delta) +
                           " differs from sum of f " + std::to_string(result.sum_f));
  }
  return result;
}

std::vector<Bowtie> parse_bowties(std::string_view text) {
  std::vector<Bowtie> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    Bowtie b;
    for (Vertex& x : b.v) {
      if (!(fields >> x)) throw ParseError(lineno, "expected five vertex indices");
    }
    std::string extra;
    if (fields >> extra) throw ParseError(lineno, "trailing data after five vertices");
    out.push_back(b);
  }
  return out;
}

}  // namespace hamcolor
