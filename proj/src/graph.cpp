#include "hamcolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hamcolor {

VertexSet::VertexSet(std::vector<Vertex> vertices) : items_(std::move(vertices)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  std::vector<Vertex> v;
  for (Vertex x = first; x < last; ++x) v.push_back(x);
  return VertexSet(std::move(v));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

void VertexSet::check_bounds(int n) const {
  if (!items_.empty() && (items_.front() < 0 || items_.back() >= n)) {
    throw ValidationError("vertex set member out of range 0.." + std::to_string(n - 1));
  }
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

std::size_t VertexSet::symmetric_difference_size(const VertexSet& other) const {
  return size() + other.size() - 2 * set_intersection(other).size();
}

ColoredGraph::ColoredGraph(int n, int r, std::vector<Edge> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  if (n < 0) throw ValidationError("vertex count must be non-negative");
  if (r < 1) throw ValidationError("color count must be at least 1");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw ValidationError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                            " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw ValidationError("loop at vertex " + std::to_string(e.u));
    if (e.color < 1 || e.color > r) {
      throw ValidationError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                            " has color " + std::to_string(e.color) + " outside 1.." +
                            std::to_string(r));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw ValidationError("duplicate edge " + std::to_string(edges_[i].u) + " " +
                            std::to_string(edges_[i].v));
    }
  }
  adjacency_.resize(static_cast<std::size_t>(n));
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.color});
    adjacency_[e.v].push_back({e.u, e.color});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

std::span<const ColoredGraph::Neighbor> ColoredGraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::optional<Color> ColoredGraph::color(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, Vertex x) { return a.vertex < x; });
  if (it == list.end() || it->vertex != v) return std::nullopt;
  return it->color;
}

Color ColoredGraph::color_of(Vertex u, Vertex v) const {
  auto c = color(u, v);
  if (!c) {
    throw ValidationError("no edge " + std::to_string(u) + " " + std::to_string(v));
  }
  return *c;
}

void ColoredGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw ValidationError("vertex " + std::to_string(v) + " outside 0.." +
                          std::to_string(n_ - 1));
  }
}

void ColoredGraph::check_color(Color k) const {
  if (k < 1 || k > r_) {
    throw ColorOutOfRange("color " + std::to_string(k) + " outside 1.." +
                          std::to_string(r_));
  }
}

namespace {

std::vector<long long> parse_fields(std::string_view line, std::size_t lineno,
                                    std::size_t expected) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = line.find(' ', pos);
    std::string_view token = line.substr(pos, next == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : next - pos);
    if (token.empty()) throw ParseError(lineno, "expected single-space separated integers");
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(lineno, "not a decimal integer: '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (out.size() != expected) {
    throw ParseError(lineno, "expected " + std::to_string(expected) + " fields, got " +
                                 std::to_string(out.size()));
  }
  return out;
}

constexpr long long kMaxIndex = 1 << 30;

}  // namespace

ColoredGraph load_graph(std::string_view text) {
  std::optional<std::pair<int, int>> header;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    if (!header) {
      auto f = parse_fields(line, lineno, 2);
      if (f[0] < 1 || f[0] > kMaxIndex) throw ParseError(lineno, "vertex count must be >= 1");
      if (f[1] < 1 || f[1] > kMaxIndex) throw ParseError(lineno, "color count must be >= 1");
      header = {static_cast<int>(f[0]), static_cast<int>(f[1])};
      continue;
    }
    auto f = parse_fields(line, lineno, 3);
    for (long long x : f) {
      if (x < -kMaxIndex || x > kMaxIndex) throw ParseError(lineno, "integer out of range");
    }
    edges.push_back({static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]),
                     static_cast<Color>(f[2])});
  }
  if (!header) throw ParseError(lineno, "missing header line 'n r'");
  return ColoredGraph(header->first, header->second, std::move(edges));
}

std::string save_graph(const ColoredGraph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.r() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.color << '\n';
  return out.str();
}

int min_degree(const ColoredGraph& g) {
  int best = g.n() == 0 ? 0 : g.degree(0);
  for (Vertex v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::vector<Edge> color_class(const ColoredGraph& g, Color k) {
  g.check_color(k);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (e.color == k) out.push_back(e);
  }
  return out;
}

Subgraph induced_subgraph(const ColoredGraph& g, const VertexSet& s) {
  s.check_bounds(g.n());
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) local[s[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v], e.color});
  }
  return {ColoredGraph(static_cast<int>(s.size()), g.r(), std::move(edges)), s.items()};
}

BipartiteSubgraph bipartite_between(const ColoredGraph& g, const VertexSet& a,
                                    const VertexSet& b) {
  a.check_bounds(g.n());
  b.check_bounds(g.n());
  if (!a.set_intersection(b).empty()) throw OverlappingSides("sides share a vertex");
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  std::vector<char> in_a(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> to_parent;
  for (Vertex v : a) {
    local[v] = static_cast<int>(to_parent.size());
    in_a[v] = 1;
    to_parent.push_back(v);
  }
  for (Vertex v : b) {
    local[v] = static_cast<int>(to_parent.size());
    to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] < 0 || local[e.v] < 0 || in_a[e.u] == in_a[e.v]) continue;
    edges.push_back({local[e.u], local[e.v], e.color});
  }
  int na = static_cast<int>(a.size());
  int total = static_cast<int>(to_parent.size());
  return {ColoredGraph(total, g.r(), std::move(edges)), std::move(to_parent),
          VertexSet::range(0, na), VertexSet::range(na, total)};
}

}  // namespace hamcolor
