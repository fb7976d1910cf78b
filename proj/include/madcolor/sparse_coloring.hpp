#pragma once

#include <optional>
#include <string>
#include <vector>

#include "madcolor/classification.hpp"
#include "madcolor/coloring.hpp"
#include "madcolor/graph.hpp"
#include "madcolor/local_runtime.hpp"

namespace madcolor {

// Knobs shared by the peeling algorithms. The radius coefficient may be
// overridden for experiments; the quantitative per-iteration guarantees
// are only enforced at the default coefficient (warnings otherwise).
struct SparseConfig {
  std::optional<double> c_override;
  long long round_cap = 0;  // 0: derive from n and d

  double coefficient() const {
    return c_override.value_or(kDefaultRadiusCoefficient);
  }
  bool enforce_bounds() const { return !c_override.has_value(); }
};

// Distributed classification of one peeling iteration; must agree with
// happy_oracle exactly. Charges radius+1 rounds.
Classification classify(const Graph& g, int d, double c, RoundTranscript& transcript,
                        int n_for_radius = 0);

// Per-iteration audit data of a peeling run.
struct IterationStats {
  int n = 0;          // vertices alive this iteration
  int happy = 0;      // |A_i|
  int sad = 0;        // |S_i|
  int poor = 0;       // |P_i|
  int low_degree_in_sad = 0;  // vertices of degree <= d-1 inside G_i[S_i]
};

struct PeelingTrace {
  int iterations = 0;
  std::vector<IterationStats> per_iteration;
  std::vector<std::string> warnings;  // bound violations under an override

  double min_happy_ratio() const;
};

// Extends a proper list coloring of g minus the happy set to all of g.
// May recolor sad vertices; never touches poor vertices or rich vertices
// outside the forest and the root balls.
//
// When per_vertex_budget is false the degree budget is the uniform d;
// otherwise every vertex's own list size plays the role of d (the
// variant used for nice list assignments, where every vertex is rich).
PartialColoring extend_to_happy(const Graph& g, const Classification& cls,
                                const PartialColoring& col, const ListAssignment& lists,
                                RoundTranscript& transcript, bool per_vertex_budget = false);

enum class SparseOutcome { Colored, CliqueFound };

struct SparseResult {
  SparseOutcome outcome = SparseOutcome::Colored;
  PartialColoring coloring;
  VertexSet clique;
  PeelingTrace trace;
  RoundTranscript transcript;
};

// Either finds a (d+1)-clique (two rounds) or, provided the maximum
// average degree of g is at most d, finds a proper coloring from lists
// of size >= d. Raises ProgressStallError when no progress is possible,
// which signals mad(g) > d.
SparseResult color_sparse(const Graph& g, int d, const ListAssignment& lists,
                          const SparseConfig& config = {});

// A list assignment is nice when |L(v)| >= deg(v), strengthened to
// deg(v)+1 whenever deg(v) <= 2 or the neighborhood of v is a clique.
// Returns the vertices violating that condition (empty means nice).
std::vector<int> nice_violations(const Graph& g, const ListAssignment& lists);

struct NiceResult {
  PartialColoring coloring;
  PeelingTrace trace;
  RoundTranscript transcript;
};

// Full list coloring for a nice assignment; same peeling machinery with
// every vertex treated as rich and per-vertex list sizes as budgets.
NiceResult color_nice(const Graph& g, const ListAssignment& lists,
                      const SparseConfig& config = {});

enum class BrooksOutcome { Colored, Infeasible };

struct BrooksResult {
  BrooksOutcome outcome = BrooksOutcome::Colored;
  PartialColoring coloring;
  VertexSet infeasible_component;
  PeelingTrace trace;
  RoundTranscript transcript;
};

// List version of the maximum-degree coloring dichotomy: components that
// are complete on delta+1 vertices are solved by matching (reporting
// infeasibility exactly when the matching fails); every other component
// is colored through the nice-list machinery.
BrooksResult brooks_list(const Graph& g, int delta, const ListAssignment& lists,
                         const SparseConfig& config = {});

}  // namespace madcolor
