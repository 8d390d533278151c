#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamcolor/graph.hpp"

namespace hamcolor {

enum class ConstructionKind { GeneralR, Tripartite3, Counterexample2 };

// "general-r", "tripartite3", "counterexample2".
std::string construction_kind_name(ConstructionKind kind);
// Throws ParameterError on an unknown name.
ConstructionKind parse_construction_kind(const std::string& name);

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::GeneralR;
  int n = 0;
  int r = 2;  // forced to 3 for Tripartite3 and 2 for Counterexample2
  int t = 0;  // Counterexample2 only
};

// Parts are blocks of consecutive vertex indices in the listed order.
struct Construction {
  ConstructionSpec spec;
  ColoredGraph graph;
  std::vector<VertexSet> parts;
  std::vector<std::string> part_names;
  int min_degree = 0;          // computed
  int nominal_min_degree = 0;  // the closed-form value quoted for the family
};

// Lookup by name; throws ParameterError when absent.
const VertexSet& part(const Construction& c, const std::string& name);

// V_1..V_{r-1} of size n/2r, then V_r of size (r+1)n/2r. V_r is a clique in
// color r and V_i is completely joined to V_r in color i. Throws
// DivisibilityError unless 2r | n, ParameterError unless r >= 2.
Construction build_general_r(int n, int r);

// Complete tripartite graph on V_1, V_2, V_3 of size n/3 with chi(uv) the
// color of the part containing neither endpoint. Throws DivisibilityError.
Construction build_tripartite_3(int n);

// V_0 of size t, V_1 and V_2 of size (n-t)/2. Color 1 clique on V_0 u V_2,
// color 2 clique on V_1, V_0-V_1 complete in color 2, no V_1-V_2 edges.
// The computed minimum degree is (n+t)/2 - 1; the nominal value is (n+t)/2.
// Throws ParameterError unless t >= 1, n - t is even and n - t >= 4.
Construction build_counterexample_2(int n, int t);

// Dispatches on spec.kind.
Construction build_construction(const ConstructionSpec& spec);

}  // namespace hamcolor
