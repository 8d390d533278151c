#include "hamcolor/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hamcolor/bowtie.hpp"

namespace hamcolor {

// ---------------------------------------------------------------------------
// Profiles

VertexSet NeighborhoodProfile::without_color(Color k) const {
  std::vector<Vertex> out;
  for (std::size_t c = 1; c < by_color.size(); ++c) {
    if (static_cast<Color>(c) == k) continue;
    out.insert(out.end(), by_color[c].begin(), by_color[c].end());
  }
  return VertexSet(std::move(out));
}

VertexSet NeighborhoodProfile::all() const { return without_color(0); }

bool NeighborhoodProfile::has_color(Color k) const {
  return std::binary_search(colors.begin(), colors.end(), k);
}

NeighborhoodProfile neighborhood_profile(const ColoredGraph& g, Vertex v) {
  NeighborhoodProfile p;
  p.v = v;
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(g.r()) + 1);
  for (const auto& nb : g.neighbors(v)) buckets[nb.color].push_back(nb.vertex);
  for (Color k = 1; k <= g.r(); ++k) {
    if (!buckets[k].empty()) p.colors.push_back(k);
  }
  for (auto& b : buckets) p.by_color.emplace_back(std::move(b));
  return p;
}

std::vector<Edge> cross_edges(const ColoredGraph& g, const NeighborhoodProfile& p, Color k,
                              Color l) {
  g.check_color(k);
  g.check_color(l);
  std::vector<Edge> out;
  for (Vertex a : p.with_color(k)) {
    for (Vertex b : p.with_color(l)) {
      if (auto c = g.color(a, b)) out.push_back({std::min(a, b), std::max(a, b), *c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Edges of g with both endpoints in s.
std::vector<Edge> edges_within(const ColoredGraph& g, const VertexSet& s) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (auto c = g.color(s[i], s[j])) out.push_back({s[i], s[j], *c});
    }
  }
  return out;
}

bool all_colored(const std::vector<Edge>& edges, Color k) {
  return std::all_of(edges.begin(), edges.end(), [k](const Edge& e) { return e.color == k; });
}

}  // namespace

// ---------------------------------------------------------------------------
// Triangle typing

std::string TriangleEdgeType::to_string() const {
  switch (kind) {
    case Kind::A:
      return "a(" + std::to_string(first) + "," + std::to_string(second) + "," +
             std::to_string(third) + ")";
    case Kind::B:
      return "b(" + std::to_string(first) + "," + std::to_string(second) + ")";
    case Kind::C:
      return "c(" + std::to_string(first) + ")";
  }
  return "?";
}

TriangleEdgeType triangle_edge_type(const ColoredGraph& g, Vertex v, Vertex u, Vertex w) {
  auto vu = g.color(v, u);
  auto vw = g.color(v, w);
  auto uw = g.color(u, w);
  if (!vu || !vw || !uw) {
    throw NotATriangle(std::to_string(v) + " " + std::to_string(u) + " " + std::to_string(w) +
                       " is not a triangle");
  }
  using Kind = TriangleEdgeType::Kind;
  Color x = *vu;
  Color y = *vw;
  Color z = *uw;
  if (x == y) {
    // All-equal triangles are c(k); b needs a different internal color.
    if (z == x) return {Kind::C, x, 0, 0};
    return {Kind::B, x, z, 0};
  }
  if (z == x) return {Kind::C, y, 0, 0};
  if (z == y) return {Kind::C, x, 0, 0};
  return {Kind::A, std::min(x, y), std::max(x, y), z};
}

// ---------------------------------------------------------------------------
// Vertex types

std::string label_to_string(const VertexLabel& label) {
  struct Visitor {
    std::string operator()(const TypeA& a) const {
      return "A(" + std::to_string(a.j) + "," + std::to_string(a.k) + "," +
             std::to_string(a.l) + ")";
    }
    std::string operator()(const TypeB& b) const {
      return "B(incident=" + std::to_string(b.incident_color) +
             ",hub=" + std::to_string(b.hub_color) + ")";
    }
    std::string operator()(const TypeC& c) const { return "C(" + std::to_string(c.k) + ")"; }
  };
  return std::visit(Visitor{}, label);
}

bool satisfies_type_a(const ColoredGraph& g, const NeighborhoodProfile& p, const TypeA& a) {
  if (a.j == a.k || a.j == a.l || a.k == a.l) return false;
  std::vector<Color> expected{std::min(a.j, a.k), std::max(a.j, a.k)};
  if (p.colors != expected) return false;
  if (!edges_within(g, p.with_color(a.j)).empty()) return false;
  if (!edges_within(g, p.with_color(a.k)).empty()) return false;
  return all_colored(edges_within(g, p.all()), a.l);
}

bool satisfies_type_b(const ColoredGraph& g, const NeighborhoodProfile& p, const TypeB& b) {
  if (b.incident_color == b.hub_color) return false;
  if (p.colors != std::vector<Color>{b.incident_color}) return false;
  return all_colored(edges_within(g, p.with_color(b.incident_color)), b.hub_color);
}

bool satisfies_type_c(const ColoredGraph& g, const NeighborhoodProfile& p, const TypeC& c) {
  if (!p.has_color(c.k)) return false;
  if (!all_colored(edges_within(g, p.with_color(c.k)), c.k)) return false;
  if (!edges_within(g, p.without_color(c.k)).empty()) return false;
  for (Color l : p.colors) {
    if (l == c.k) continue;
    if (!all_colored(cross_edges(g, p, c.k, l), l)) return false;
  }
  return true;
}

bool satisfies(const ColoredGraph& g, const NeighborhoodProfile& p, const VertexLabel& label) {
  struct Visitor {
    const ColoredGraph& g;
    const NeighborhoodProfile& p;
    bool operator()(const TypeA& a) const { return satisfies_type_a(g, p, a); }
    bool operator()(const TypeB& b) const { return satisfies_type_b(g, p, b); }
    bool operator()(const TypeC& c) const { return satisfies_type_c(g, p, c); }
  };
  return std::visit(Visitor{g, p}, label);
}

std::string VertexType::to_string() const {
  switch (status) {
    case Status::Classified:
      return label_to_string(*label);
    case Status::Vacuous:
      return "vacuous";
    case Status::Unclassified:
      return "unclassified";
  }
  return "?";
}

namespace {

VertexLabel label_for(const TriangleEdgeType& t) {
  switch (t.kind) {
    case TriangleEdgeType::Kind::A:
      return TypeA{t.first, t.second, t.third};
    case TriangleEdgeType::Kind::B:
      return TypeB{t.first, t.second};
    case TriangleEdgeType::Kind::C:
      break;
  }
  return TypeC{t.first};
}

// All labels whose parameters use colors of L(v); only these can hold.
std::vector<VertexLabel> candidate_labels(const NeighborhoodProfile& p, int r) {
  std::vector<VertexLabel> out;
  if (p.colors.size() == 2) {
    for (Color l = 1; l <= r; ++l) out.push_back(TypeA{p.colors[0], p.colors[1], l});
  }
  if (p.colors.size() == 1) {
    for (Color hub = 1; hub <= r; ++hub) out.push_back(TypeB{p.colors[0], hub});
  }
  for (Color k : p.colors) out.push_back(TypeC{k});
  return out;
}

}  // namespace

VertexType classify_vertex(const ColoredGraph& g, Vertex v) {
  NeighborhoodProfile p = neighborhood_profile(g, v);
  std::vector<Edge> inner = edges_within(g, p.all());
  VertexType result;
  if (inner.empty()) {
    result.status = VertexType::Status::Vacuous;
    for (const VertexLabel& label : candidate_labels(p, g.r())) {
      if (satisfies(g, p, label)) result.consistent.push_back(label);
    }
    if (!result.consistent.empty()) result.label = result.consistent.front();
    result.reason = "neighborhood spans no edge";
    return result;
  }
  TriangleEdgeType first = triangle_edge_type(g, v, inner[0].u, inner[0].v);
  for (std::size_t i = 1; i < inner.size(); ++i) {
    TriangleEdgeType t = triangle_edge_type(g, v, inner[i].u, inner[i].v);
    if (!(t == first)) {
      result.reason = "mixed triangle types " + first.to_string() + " and " + t.to_string();
      result.evidence = {inner[0], inner[i]};
      return result;
    }
  }
  VertexLabel label = label_for(first);
  if (!satisfies(g, p, label)) {
    result.reason = "uniform type " + first.to_string() + " but " + label_to_string(label) +
                    " fails its definition (L(v) has " + std::to_string(p.colors.size()) +
                    " colors)";
    result.evidence = {inner[0]};
    return result;
  }
  result.status = VertexType::Status::Classified;
  result.label = label;
  result.consistent = {label};
  return result;
}

// ---------------------------------------------------------------------------
// Dichotomy

std::string mode_name(StructureMode mode) {
  switch (mode) {
    case StructureMode::DominantColor:
      return "DominantColor";
    case StructureMode::TripartiteA:
      return "TripartiteA";
    case StructureMode::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

bool conforms_dominant(const VertexType& t, Color k) {
  if (t.status == VertexType::Status::Vacuous) return true;
  if (t.status == VertexType::Status::Unclassified) return false;
  if (const auto* c = std::get_if<TypeC>(&*t.label)) return c->k == k;
  if (const auto* b = std::get_if<TypeB>(&*t.label)) return b->hub_color == k;
  return false;
}

bool conforms_tripartite(const VertexType& t) {
  if (t.status == VertexType::Status::Vacuous) return true;
  if (t.status == VertexType::Status::Unclassified) return false;
  return std::holds_alternative<TypeA>(*t.label);
}

}  // namespace

DichotomyReport global_dichotomy(const ColoredGraph& g) {
  DichotomyReport report;
  for (Vertex v = 0; v < g.n(); ++v) report.types.push_back(classify_vertex(g, v));
  bool any_classified =
      std::any_of(report.types.begin(), report.types.end(), [](const VertexType& t) {
        return t.status == VertexType::Status::Classified;
      });

  std::vector<std::vector<Vertex>> misfits;
  for (Color k = 1; k <= g.r(); ++k) {
    std::vector<Vertex> bad;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!conforms_dominant(report.types[v], k)) bad.push_back(v);
    }
    if (bad.empty() && any_classified) {
      report.mode = StructureMode::DominantColor;
      report.k = k;
      return report;
    }
    misfits.push_back(std::move(bad));
  }
  std::vector<Vertex> bad;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.r() != 3 || !conforms_tripartite(report.types[v])) bad.push_back(v);
  }
  if (bad.empty() && any_classified) {
    report.mode = StructureMode::TripartiteA;
    return report;
  }
  misfits.push_back(std::move(bad));

  report.mode = StructureMode::Inconclusive;
  if (any_classified) {
    report.nonconforming = *std::min_element(
        misfits.begin(), misfits.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
  } else {
    for (Vertex v = 0; v < g.n(); ++v) report.nonconforming.push_back(v);
  }
  report.has_bad_bowtie = has_bad_bowtie(g);
  return report;
}

// ---------------------------------------------------------------------------
// Partition recovery

namespace {

std::string fraction(long long num, long long den) {
  long long d = std::gcd(num, den);
  if (d == 0) return "0";
  num /= d;
  den /= d;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

// Whether an edge of color c between parts p and q (0-based) fits the mode.
bool conforming_edge(const StructureCertificate& cert, int p, int q, Color c) {
  if (cert.mode == StructureMode::DominantColor) {
    int big = cert.k - 1;
    if (p == big && q == big) return c == cert.k;
    if (p == big) return c == q + 1;
    if (q == big) return c == p + 1;
    return false;
  }
  if (p == q) return false;
  return c == 6 - (p + 1) - (q + 1);
}

int placement_score(const ColoredGraph& g, const StructureCertificate& cert,
                    const std::vector<int>& assign, Vertex v, int part) {
  int score = 0;
  for (const auto& nb : g.neighbors(v)) {
    int q = assign[nb.vertex];
    if (q < 0 || nb.vertex == v) continue;
    score += conforming_edge(cert, part, q, nb.color) ? 1 : -1;
  }
  return score;
}

}  // namespace

StructureCertificate recover_partition(const ColoredGraph& g, const ColoredGraph& residual,
                                       const VertexSet& removed, int m) {
  return recover_partition(g, residual, removed, m, global_dichotomy(residual));
}

StructureCertificate recover_partition(const ColoredGraph& g, const ColoredGraph& residual,
                                       const VertexSet& removed, int m,
                                       const DichotomyReport& dichotomy) {
  if (m < 1) throw ParameterError("m must be positive");
  removed.check_bounds(g.n());
  VertexSet kept = VertexSet::range(0, g.n()).set_difference(removed);
  if (static_cast<std::size_t>(residual.n()) != kept.size() ||
      dichotomy.types.size() != kept.size()) {
    throw std::invalid_argument("residual graph does not match V(g) minus the removed set");
  }
  if (dichotomy.mode == StructureMode::Inconclusive) {
    throw ModeInconclusive("structural dichotomy is inconclusive");
  }
  const int n = g.n();
  const int r = g.r();
  const long long rm = static_cast<long long>(r) * m;

  StructureCertificate cert;
  cert.mode = dichotomy.mode;
  cert.k = dichotomy.k;
  cert.r = r;
  cert.m = m;
  cert.exceptional = removed;
  cert.neighborhood_matching_threshold = 6 * rm * r - 5 * rm;
  cert.path_edge_budget = 12 * rm * r - 1;

  const int parts = cert.mode == StructureMode::DominantColor ? r : 3;
  if (n < parts) throw TargetsInfeasible("fewer vertices than parts");
  std::vector<std::size_t> target(static_cast<std::size_t>(parts));
  if (cert.mode == StructureMode::DominantColor) {
    std::size_t small = static_cast<std::size_t>((n + r) / (2 * r));
    if (static_cast<long long>(small) * (r - 1) > n) {
      throw TargetsInfeasible("rounded part sizes exceed n");
    }
    for (int i = 0; i < parts; ++i) {
      bool big = i == cert.k - 1;
      target[i] = big ? n - small * (r - 1) : small;
      cert.ideal_sizes.push_back(big ? fraction(static_cast<long long>(r + 1) * n, 2LL * r)
                                     : fraction(n, 2LL * r));
      cert.symmetric_difference_bounds.push_back(big ? 40 * rm * r : 40 * rm);
      cert.class_names.push_back(
          big ? label_to_string(TypeC{cert.k}) : label_to_string(TypeB{i + 1, cert.k}));
    }
  } else {
    for (int i = 0; i < parts; ++i) {
      target[i] = static_cast<std::size_t>(n / 3 + (i < n % 3 ? 1 : 0));
      cert.ideal_sizes.push_back(fraction(n, 3));
      cert.symmetric_difference_bounds.push_back(30 * rm);
      std::vector<Color> others;
      for (Color c = 1; c <= 3; ++c) {
        if (c != i + 1) others.push_back(c);
      }
      cert.class_names.push_back(label_to_string(TypeA{others[0], others[1], i + 1}));
    }
  }

  // Type classes, in host labels.
  std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(parts));
  std::vector<Vertex> wildcards;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const VertexType& t = dichotomy.types[i];
    Vertex host = kept[i];
    if (t.status != VertexType::Status::Classified) {
      wildcards.push_back(host);
      continue;
    }
    int part = -1;
    if (const auto* c = std::get_if<TypeC>(&*t.label)) part = c->k - 1;
    if (const auto* b = std::get_if<TypeB>(&*t.label)) part = b->incident_color - 1;
    if (const auto* a = std::get_if<TypeA>(&*t.label)) part = a->l - 1;
    classes[part].push_back(host);
  }
  cert.wildcards = VertexSet(wildcards);

  std::vector<int> assign(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < parts; ++p) {
    cert.classes.emplace_back(classes[p]);
    for (Vertex v : classes[p]) assign[v] = p;
  }

  std::vector<Vertex> pool(removed.begin(), removed.end());
  pool.insert(pool.end(), wildcards.begin(), wildcards.end());

  // Trim oversized classes: drop the worst-fitting members, ties to the
  // highest index.
  for (int p = 0; p < parts; ++p) {
    std::vector<Vertex>& members = classes[p];
    if (members.size() <= target[p]) continue;
    std::vector<std::pair<int, Vertex>> scored;
    for (Vertex v : members) scored.emplace_back(placement_score(g, cert, assign, v, p), v);
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    members.clear();
    for (std::size_t i = 0; i < scored.size(); ++i) {
      if (i < target[p]) {
        members.push_back(scored[i].second);
      } else {
        assign[scored[i].second] = -1;
        pool.push_back(scored[i].second);
      }
    }
  }

  // Pad: pool vertices in increasing order go to the open part they fit
  // best, ties to the smallest part index.
  std::sort(pool.begin(), pool.end());
  for (Vertex v : pool) {
    int best = -1;
    int best_score = 0;
    for (int p = 0; p < parts; ++p) {
      if (classes[p].size() >= target[p]) continue;
      int s = placement_score(g, cert, assign, v, p);
      if (best == -1 || s > best_score) {
        best = p;
        best_score = s;
      }
    }
    if (best == -1) throw std::logic_error("part targets do not sum to n");
    classes[best].push_back(v);
    assign[v] = best;
  }

  for (int p = 0; p < parts; ++p) {
    VertexSet part(classes[p]);
    cert.slack.push_back(part.set_difference(cert.classes[p]));
    cert.symmetric_differences.push_back(part.symmetric_difference_size(cert.classes[p]));
    cert.realized_sizes.push_back(part.size());
    cert.parts.push_back(std::move(part));
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Certificates

bool CertificateVerdict::pass() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionResult& c) { return c.pass; });
}

long long default_matching_bound(StructureMode mode, int r, int m) {
  if (mode == StructureMode::TripartiteA) return 900LL * m;
  return 100LL * r * r * m;
}

namespace {

std::string part_name(int index) { return "V" + std::to_string(index + 1); }

ConditionResult from_verdict(std::string name, MatchingVerdict v) {
  return {std::move(name), v.holds, std::move(v.witness)};
}

}  // namespace

CertificateVerdict check_certificate(const ColoredGraph& g, const StructureCertificate& cert,
                                     int s) {
  if (s < 1) throw ParameterError("s must be positive");
  const int expected_parts = cert.mode == StructureMode::DominantColor ? g.r()
                             : cert.mode == StructureMode::TripartiteA ? 3
                                                                       : -1;
  if (expected_parts < 0) throw ModeInconclusive("certificate has no structural mode");
  if (static_cast<int>(cert.parts.size()) != expected_parts) {
    throw NotAPartition("expected " + std::to_string(expected_parts) + " parts, got " +
                        std::to_string(cert.parts.size()));
  }
  std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t p = 0; p < cert.parts.size(); ++p) {
    cert.parts[p].check_bounds(g.n());
    for (Vertex v : cert.parts[p]) {
      if (owner[v] != -1) {
        throw NotAPartition("vertex " + std::to_string(v) + " lies in two parts");
      }
      owner[v] = static_cast<int>(p);
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (owner[v] == -1) throw NotAPartition("vertex " + std::to_string(v) + " is in no part");
  }

  CertificateVerdict verdict;
  verdict.s = s;
  const std::string ss = std::to_string(s);
  if (cert.mode == StructureMode::DominantColor) {
    const int big = cert.k - 1;
    const std::string kk = std::to_string(cert.k);
    verdict.conditions.push_back(from_verdict(
        "G[" + part_name(big) + "] is (" + ss + "," + kk + ")-nearly monochromatic",
        is_nearly_monochromatic(g, SubgraphSpec::induced(cert.parts[big]), s, cert.k)));
    std::vector<Vertex> rest;
    for (int i = 0; i < g.r(); ++i) {
      if (i == big) continue;
      rest.insert(rest.end(), cert.parts[i].begin(), cert.parts[i].end());
      verdict.conditions.push_back(from_verdict(
          "G[" + part_name(i) + "," + part_name(big) + "] is (" + ss + "," +
              std::to_string(i + 1) + ")-nearly monochromatic",
          is_nearly_monochromatic(g, SubgraphSpec::between(cert.parts[i], cert.parts[big]), s,
                                  i + 1)));
    }
    verdict.conditions.push_back(
        from_verdict("G[union of V_i, i != " + kk + "] is " + ss + "-nearly empty",
                     is_nearly_empty(g, SubgraphSpec::induced(VertexSet(rest)), s)));
  } else {
    for (int i = 0; i < 3; ++i) {
      verdict.conditions.push_back(
          from_verdict("G[" + part_name(i) + "] is " + ss + "-nearly empty",
                       is_nearly_empty(g, SubgraphSpec::induced(cert.parts[i]), s)));
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        Color third = 6 - (i + 1) - (j + 1);
        verdict.conditions.push_back(from_verdict(
            "G[" + part_name(i) + "," + part_name(j) + "] is (" + ss + "," +
                std::to_string(third) + ")-nearly monochromatic",
            is_nearly_monochromatic(g, SubgraphSpec::between(cert.parts[i], cert.parts[j]), s,
                                    third)));
      }
    }
  }
  return verdict;
}

}  // namespace hamcolor
