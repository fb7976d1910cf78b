#pragma once

#include <random>
#include <vector>

#include "madcolor/coloring.hpp"
#include "madcolor/graph.hpp"

namespace madcolor::testutil {

inline Graph petersen() {
  // Outer C5, inner pentagram, spokes.
  return Graph::from_edges(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                                {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},
                                {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}});
}

inline Graph bowtie() {
  return Graph::from_edges(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
}

// Random graph with each edge present independently; deterministic in
// the seed.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  const std::uint64_t threshold = static_cast<std::uint64_t>(p * 18446744073709551615.0);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (rng() <= threshold) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

// Random Gallai tree: glue random small cliques and odd cycles along
// single shared vertices.
inline Graph random_gallai_tree(int blocks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<int> vertices{1};
  int next = 2;
  for (int b = 0; b < blocks; ++b) {
    int attach = vertices[rng() % vertices.size()];
    bool clique = rng() % 2 == 0;
    if (clique) {
      int size = 2 + static_cast<int>(rng() % 3);  // 2..4
      std::vector<int> members{attach};
      for (int i = 1; i < size; ++i) members.push_back(next++);
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          edges.push_back({members[i], members[j]});
        }
      }
      vertices.insert(vertices.end(), members.begin() + 1, members.end());
    } else {
      int len = 3 + 2 * static_cast<int>(rng() % 3);  // 3, 5, 7
      std::vector<int> members{attach};
      for (int i = 1; i < len; ++i) members.push_back(next++);
      for (int i = 0; i < len; ++i) edges.push_back({members[i], members[(i + 1) % len]});
      vertices.insert(vertices.end(), members.begin() + 1, members.end());
    }
  }
  return Graph::from_edges(next - 1, edges);
}

inline int count_components(const Graph& g) { return static_cast<int>(g.components().size()); }

}  // namespace madcolor::testutil
