#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "madcolor/graph.hpp"

namespace madcolor {

// Deterministic, seedable graph family constructors. Every generator
// validates its parameters and runs structural self-checks on its output
// (regularity, triangle-freeness, odd-degree structure, forest
// edge-disjointness) before returning.
//
// Families:
//   grid(w,h)          planar rectangular grid; bipartite
//   tri_grid(w,h)      grid plus one diagonal per face; planar, mad < 6
//   hex_grid(w,h)      hexagonal lattice patch; girth 6, mad < 3
//   klein_grid(k,l)    k-by-l grid on the Klein bottle; 4-regular
//   h_graph(l)         planar triangle-free cylinder C5 x P_{2l}
//   fisk(m)            toroidal triangulation, two adjacent odd vertices
//   forest_union(a,n)  union of a edge-disjoint random spanning forests
//   random_sparse(n,d) random graph conditioned on mad <= d
//   path(n), cycle(n), clique(n), star(n)

Graph make_grid(int w, int h);
Graph make_tri_grid(int w, int h);
Graph make_hex_grid(int w, int h);
Graph make_klein_grid(int k, int l);
Graph make_h_graph(int l);
Graph make_fisk(int m);
Graph make_forest_union(int a, int n, std::uint64_t seed);
Graph make_random_sparse(int n, int d, std::uint64_t seed);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_clique(int n);
Graph make_star(int n);

// Name-based dispatch used by the CLI: family name plus "key=value"
// parameters. Unknown families or missing parameters raise
// MalformedInputError.
Graph generate(const std::string& family, const std::map<std::string, int>& params,
               std::uint64_t seed);

// tri_grid dimensions giving exactly n vertices for powers of two.
std::pair<int, int> power_of_two_dims(int n);

}  // namespace madcolor
