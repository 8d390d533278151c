#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hamcolor/graph.hpp"
#include "hamcolor/hamilton.hpp"

namespace hamcolor {

// Two triangles v1 v2 v3 and v1 v4 v5 sharing only the center v1.
struct Bowtie {
  std::array<Vertex, 5> v{};

  Vertex center() const { return v[0]; }
  // The relabeling v1 v4 v5 v2 v3, which negates the color-counting function.
  Bowtie swapped_wings() const { return {{v[0], v[3], v[4], v[1], v[2]}}; }
  // Canonical labeling of the same subgraph: each wing ascending, and the
  // wing pairs in lexicographic order.
  Bowtie canonical() const;
  std::string to_string() const;

  friend bool operator==(const Bowtie&, const Bowtie&) = default;
  friend auto operator<=>(const Bowtie&, const Bowtie&) = default;
};

// Throws InvalidBowtie unless the five vertices are distinct and all six
// edges are present in g.
void validate_bowtie(const ColoredGraph& g, const Bowtie& b);

// f(B,k): +1 for each of v1v2, v1v3, v4v5 colored k, -1 for each of v1v4,
// v1v5, v2v3 colored k. Always in [-3, 3].
int color_count_f(const ColoredGraph& g, const Bowtie& b, Color k);

// Smallest color k with f(B,k) != 0, if any.
std::optional<Color> bad_color(const ColoredGraph& g, const Bowtie& b);
inline bool is_bad(const ColoredGraph& g, const Bowtie& b) {
  return bad_color(g, b).has_value();
}

struct BowtieEnumerationOptions {
  bool only_bad = false;
  std::optional<std::size_t> cap;
};

// Each bowtie subgraph exactly once, canonically labeled, ordered by center,
// then first wing, then second wing. Return false from the visitor to stop.
void enumerate_bowties(const ColoredGraph& g, const std::function<bool(const Bowtie&)>& visit,
                       const BowtieEnumerationOptions& options = {});
std::vector<Bowtie> list_bowties(const ColoredGraph& g,
                                 const BowtieEnumerationOptions& options = {});

bool has_bad_bowtie(const ColoredGraph& g);

struct BowtiePacking {
  std::vector<Bowtie> bowties;
  VertexSet covered;  // union of the bowties' vertices
  std::size_t size() const { return bowties.size(); }
};

// First-fit over the canonical enumeration order: a maximal (not maximum)
// family of vertex-disjoint bad bowties.
BowtiePacking greedy_disjoint_bad_packing(const ColoredGraph& g);

struct StripResult {
  ColoredGraph residual;
  std::vector<Vertex> to_parent;  // residual vertex -> host vertex
  VertexSet removed;              // V0, |V0| = 5t
  BowtiePacking packing;
  bool residual_clean = false;    // confirmed by an exhaustive re-scan
  std::size_t t() const { return packing.size(); }
};

StripResult strip_bad_bowties(const ColoredGraph& g);

struct SwapResult {
  HamiltonCycle h1;
  HamiltonCycle h2;
  // Bowties as used: relabeled so that f(B,k) > 0.
  std::vector<Bowtie> oriented;
  std::vector<int> f_values;
  int delta = 0;  // count_k(H1) - count_k(H2)
  int sum_f = 0;
};

// Extends L1 = {v1v2, v1v3, v4v5 : B} to a Hamilton cycle H1 and replaces
// L1 by L2 = {v2v3, v1v4, v1v5 : B} to get H2. The identity delta = sum f is
// checked; a violation is an internal error. Throws NotDisjoint, NotKBad,
// InvalidBowtie, ColorOutOfRange, NoExtensionFound.
SwapResult amplifier_swap(const ColoredGraph& g, const std::vector<Bowtie>& bowties, Color k,
                          const ExtensionOptions& options = {});

// Whitespace-separated "v1 v2 v3 v4 v5" lines; '#' lines ignored.
std::vector<Bowtie> parse_bowties(std::string_view text);

}  // namespace hamcolor
