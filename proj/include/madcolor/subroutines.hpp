#pragma once

#include <optional>
#include <string>
#include <vector>

#include "madcolor/coloring.hpp"
#include "madcolor/graph.hpp"
#include "madcolor/local_runtime.hpp"

namespace madcolor {

// Some (d+1)-clique of g if one exists, found by every vertex inspecting
// its radius-2 view (two simulated rounds). Ties are broken toward the
// clique with the lexicographically smallest sorted id sequence.
std::optional<VertexSet> find_clique(const Graph& g, int d, RoundTranscript& transcript);

// Proper coloring of h with colors {1..classes} where classes-1 bounds
// the maximum degree. Runs as a real message-passing program: an
// id-based palette reduction via polynomial fingerprints, then greedy
// elimination of one color class per round.
PartialColoring plus_one_coloring(const Graph& h, int d, RoundTranscript& transcript);

// Vertex-disjoint rooted trees covering a target set.
struct RulingForest {
  std::vector<int> roots;    // sorted
  std::vector<int> members;  // sorted union of all trees
  // Aligned with members; parent is 0 for roots.
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<int> root_of;

  bool is_member(int v) const;
  int member_index(int v) const;
  int max_depth() const;
};

// Computes a ruling forest for U in h: roots pairwise at distance at
// least k in h, every vertex of U in some tree, and tree depth at most
// k*ceil(log2 n). Deterministic: candidate filtering by id bits, then a
// simultaneous truncated multi-source BFS with (root id, parent id)
// tie-breaking. Charges the schedule's round count.
RulingForest ruling_forest(const Graph& h, const VertexSet& u, int k, RoundTranscript& transcript);

// Independent checker for the three ruling-forest properties; recomputes
// all distances by BFS. Returns human-readable problems, empty when the
// forest is valid.
std::vector<std::string> verify_ruling_forest(const Graph& h, const VertexSet& u, int k,
                                              const RulingForest& forest);

}  // namespace madcolor
