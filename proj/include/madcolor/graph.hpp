#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace madcolor {

// A set of vertex ids of some host graph, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

using Edge = std::pair<int, int>;

// Immutable simple undirected graph. Vertices are identified by the
// integers 1..n; adjacency lists are sorted. All operations are pure,
// so a Graph can be shared freely across threads.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Endpoints are validated against
  // 1..n, self-loops are rejected, parallel edges are deduplicated.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  std::span<const int> neighbors(int v) const {
    check_vertex(v);
    return {adj_[v - 1].data(), adj_[v - 1].size()};
  }
  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v - 1].size());
  }
  int max_degree() const;
  bool has_edge(int u, int v) const;

  // Edges as (u, v) pairs with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_connected() const;
  std::vector<VertexSet> components() const;
  // Eccentricity of v within its component.
  int eccentricity(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// An induced subgraph together with the mapping from its fresh ids
// (1..|S|) back to the ids of the host graph.
struct Subgraph {
  Graph graph;
  std::vector<int> to_original;  // to_original[new_id - 1] = original id

  int original_id(int new_id) const { return to_original[new_id - 1]; }
};

// Subgraph induced by S (a subset of G's vertices). Fresh ids follow the
// sorted order of S, and the mapping to original ids is returned with it.
Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

// BFS ball of radius r around v.
VertexSet ball(const Graph& g, int v, int r);

// Ball of radius r around v inside G[R]; empty when v is not in R.
VertexSet ball_within(const Graph& g, const VertexSet& r_set, int v, int radius);

// Block decomposition: maximal 2-connected subgraphs, bridge edges, and
// isolated vertices (an isolated vertex counts as a trivial block). The
// block-cut tree links block indices to cut vertex ids.
struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  std::vector<std::pair<int, int>> block_cut_tree;  // (block index, cut vertex id)
};

BlockDecomposition block_decomposition(const Graph& g);

// True iff every block of every component is a clique or an induced odd
// cycle. Disconnected graphs pass iff every component does.
bool is_gallai_tree(const Graph& g);

// Some q-clique containing v inside the closed neighborhood of v, or
// nullopt. Returns the lexicographically smallest such clique (by sorted
// vertex ids).
std::optional<VertexSet> clique_at(const Graph& g, int v, int q);

// Edge-list text format: first line "n m", then m lines "u v" (1-based).
// Lines whose first non-space character is '#' are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace madcolor
