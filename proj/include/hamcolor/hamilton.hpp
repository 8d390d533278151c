#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hamcolor/graph.hpp"

namespace hamcolor {

// A Hamilton cycle of a specific host graph, in canonical form: starts at
// vertex 0 and the second vertex is the smaller of 0's two cycle neighbors.
class HamiltonCycle {
 public:
  // Validates `order` as a Hamilton cycle of g (any rotation or direction)
  // and canonicalizes it. Throws InvalidCycle.
  static HamiltonCycle from_sequence(const ColoredGraph& g, std::vector<Vertex> order);

  const std::vector<Vertex>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  // counts()[k-1] is the number of cycle edges colored k.
  const std::vector<int>& counts() const noexcept { return counts_; }
  int count(Color k) const { return counts_.at(static_cast<std::size_t>(k - 1)); }
  // Cycle edges with u < v, sorted.
  std::vector<Edge> edges() const { return edges_; }
  bool contains_edge(Vertex u, Vertex v) const;

  // One line of space-separated vertices, no trailing newline.
  std::string to_string() const;

  friend bool operator==(const HamiltonCycle& a, const HamiltonCycle& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<Vertex> order_;
  std::vector<int> counts_;
  std::vector<Edge> edges_;
};

// Rotation/reflection normal form; `order` must be a permutation of 0..n-1
// with n >= 3.
std::vector<Vertex> canonical_cycle_order(std::vector<Vertex> order);

// Color-bias carried as the integer max_i |r * c_i - n| so that no rounding
// is ever needed; the rational bias is scaled / r.
struct BiasReport {
  std::vector<int> counts;
  long long scaled = 0;
  int r = 1;

  // Reduced fraction, e.g. "2/3" or "3".
  std::string bias_string() const;
  double bias() const { return static_cast<double>(scaled) / r; }
};

long long scaled_bias(const std::vector<int>& counts, int n);
BiasReport color_bias(const ColoredGraph& g, const HamiltonCycle& h);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct EnumerationOptions {
  std::optional<std::uint64_t> cap;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

struct EnumerationStats {
  std::uint64_t cycles = 0;
  std::uint64_t nodes = 0;
  bool stopped_early = false;  // cap hit or callback asked to stop
};

// Raw visitor: cycle order (canonical) and per-color counts. Return false to
// stop the enumeration.
using RawCycleVisitor =
    std::function<bool(const std::vector<Vertex>& order, const std::vector<int>& counts)>;

// Every Hamilton cycle exactly once, in lexicographic order of the canonical
// vertex sequence. Requires 3 <= n <= 64 (ParameterError otherwise); throws
// BudgetExceeded when the search-node budget runs out.
EnumerationStats enumerate_hamilton_cycles_raw(const ColoredGraph& g,
                                               const RawCycleVisitor& visit,
                                               const EnumerationOptions& options = {});

EnumerationStats enumerate_hamilton_cycles(
    const ColoredGraph& g, const std::function<bool(const HamiltonCycle&)>& visit,
    const EnumerationOptions& options = {});

std::vector<HamiltonCycle> all_hamilton_cycles(const ColoredGraph& g,
                                               const EnumerationOptions& options = {});

// Subset dynamic program; requires 3 <= n <= 22.
bool has_hamilton_cycle_dp(const ColoredGraph& g);

struct BiasSpectrum {
  long long min_scaled = 0;
  long long max_scaled = 0;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  // A cycle attaining each extreme (first in enumeration order).
  std::vector<Vertex> min_cycle;
  std::vector<Vertex> max_cycle;
};

// Exact extremes of the scaled bias over all Hamilton cycles. Throws
// NotHamiltonian or BudgetExceeded.
BiasSpectrum bias_spectrum(const ColoredGraph& g,
                           std::uint64_t node_budget = kDefaultNodeBudget);

// Vertex-disjoint union of paths inside a host graph. |E(L)| plays the role
// of the path-system edge budget C in the minimum degree condition
// delta >= n/2 + (C+1)/2 under which a Hamilton cycle through L must exist.
class PathSystem {
 public:
  PathSystem() = default;
  explicit PathSystem(std::vector<Edge> edges);
  // Path through the listed vertices in order.
  static PathSystem path(const std::vector<Vertex>& vertices);

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }

  // Throws NotALinearForest unless every edge exists in g, no vertex has
  // degree above 2, and there is no cycle.
  void validate(const ColoredGraph& g) const;

 private:
  std::vector<Edge> edges_;  // u < v, sorted, colors ignored
};

// delta(g) >= n/2 + (|E(L)|+1)/2, compared exactly in integers.
bool extension_guaranteed(const ColoredGraph& g, const PathSystem& l);

struct ExtensionOptions {
  std::uint32_t seed = 0x5eed;
  // Rotation steps before the exhaustive fallback; 0 picks 200 n^2 + 1000.
  std::uint64_t max_rotation_steps = 0;
  int exhaustive_max_n = 20;
  std::uint64_t exhaustive_node_budget = kDefaultNodeBudget;
};

// A Hamilton cycle of g containing every edge of L. Rotation-extension with
// the paths of L kept intact, then exhaustive search for small n. Throws
// NotALinearForest or NoExtensionFound.
HamiltonCycle extend_to_hamilton(const ColoredGraph& g, const PathSystem& l,
                                 const ExtensionOptions& options = {});

}  // namespace hamcolor
