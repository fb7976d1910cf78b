#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "madcolor/classification.hpp"
#include "madcolor/coloring.hpp"
#include "madcolor/graph.hpp"
#include "madcolor/rational.hpp"

namespace madcolor {

// Caps for the brute-force oracles. They refuse larger instances instead
// of running forever; suites may tune them.
struct OracleCaps {
  int chromatic = 40;
  int list_colorable = 25;
  int density = 40;
};

// Edges whose two colored endpoints share a color. Empty means proper.
std::vector<Edge> check_proper(const Graph& g, const PartialColoring& col);

struct ListViolations {
  std::vector<int> off_list;          // colored vertices whose color is not in their list
  std::vector<Edge> improper;         // monochromatic edges
  bool ok() const { return off_list.empty() && improper.empty(); }
};

// Off-list vertices plus proper-coloring violations. Uncolored vertices
// are never reported.
ListViolations check_list(const Graph& g, const PartialColoring& col, const ListAssignment& lists);

// Exact chromatic number by branch and bound: greedy upper bound, clique
// lower bound, deterministic lowest-id branching.
int brute_chromatic(const Graph& g, int cap = 40);

// A full list-compliant proper coloring if one exists, found by
// exhaustive backtracking.
std::optional<PartialColoring> brute_list_colorable(const Graph& g, const ListAssignment& lists,
                                                    int cap = 25);

// Exact maximum average degree, max over subgraphs H of 2|E(H)|/|V(H)|,
// as a rational in lowest terms (0 for edgeless graphs). Uses binary
// search over densities with a max-flow feasibility test.
Rational mad_exact(const Graph& g, int cap = 40);

// Reference for mad_exact: direct enumeration of vertex subsets.
// Only usable on small graphs.
Rational mad_bruteforce(const Graph& g, int cap = 20);

// max over subgraphs H with |V(H)| >= 2 of ceil(|E(H)| / (|V(H)|-1)).
int nash_williams_arboricity_bound(const Graph& g, int cap = 40);

// Centralized recomputation of the classification straight from the
// definitions; the reference the distributed classifier is checked
// against. n_for_radius overrides the vertex count used in the radius
// (callers peeling a larger graph pass the original n).
Classification happy_oracle(const Graph& g, int d, double c, int n_for_radius = 0);

}  // namespace madcolor
