#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "madcolor/errors.hpp"
#include "madcolor/graph.hpp"
#include "test_util.hpp"

using namespace madcolor;

TEST_CASE("build_graph basics") {
  Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.degree(1) == 1);
  CHECK(p3.degree(2) == 2);
  CHECK(p3.degree(3) == 1);

  Graph single = Graph::from_edges(1, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.degree(1) == 0);

  Graph dedup = Graph::from_edges(4, {{1, 2}, {1, 2}, {3, 4}});
  CHECK(dedup.edge_count() == 2);

  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), MalformedInputError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{2, 2}}), MalformedInputError);
}

TEST_CASE("induced subgraphs") {
  Graph c4 = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  auto sub = induced_subgraph(c4, {1, 2, 3});
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.edge_count() == 2);  // a path

  auto empty = induced_subgraph(c4, {});
  CHECK(empty.graph.vertex_count() == 0);

  Graph k4 = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  auto tri = induced_subgraph(k4, {2, 3, 4});
  CHECK(tri.graph.edge_count() == 3);
  CHECK(tri.original_id(1) == 2);
}

TEST_CASE("balls") {
  Graph path = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(ball(path, 3, 1) == VertexSet{2, 3, 4});
  CHECK(ball(path, 2, 0) == VertexSet{2});
  CHECK(ball_within(path, {1, 2}, 3, 5).empty());  // center outside the set
  CHECK(ball_within(path, {1, 2, 3, 5}, 1, 4) == VertexSet{1, 2, 3});

  // Monotone in the radius; full radius reaches the whole component.
  Graph g = testutil::random_graph(14, 0.2, 99);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    for (int r = 0; r + 1 <= 5; ++r) {
      auto small = ball(g, v, r);
      auto big = ball(g, v, r + 1);
      CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
    auto everything = ball(g, v, g.vertex_count());
    for (const auto& comp : g.components()) {
      if (std::binary_search(comp.begin(), comp.end(), v)) CHECK(everything == comp);
    }
  }
}

TEST_CASE("block decomposition examples") {
  Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
  auto dec = block_decomposition(p3);
  CHECK(dec.blocks.size() == 2);
  CHECK(dec.cut_vertices == VertexSet{2});

  Graph c5 = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  auto dec5 = block_decomposition(c5);
  CHECK(dec5.blocks.size() == 1);
  CHECK(dec5.cut_vertices.empty());

  auto decb = block_decomposition(testutil::bowtie());
  CHECK(decb.blocks.size() == 2);
  CHECK(decb.cut_vertices == VertexSet{3});
  CHECK(decb.block_cut_tree.size() == 2);
}

TEST_CASE("block decomposition properties on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = testutil::random_graph(8, 0.3, seed);
    auto dec = block_decomposition(g);
    // Every edge in exactly one block.
    std::size_t edge_total = 0;
    for (const auto& block : dec.blocks) {
      auto sub = induced_subgraph(g, block);
      // Vertex blocks have no edges; edge/cycle blocks are connected.
      edge_total += sub.graph.edge_count();
    }
    CHECK(edge_total == static_cast<std::size_t>(g.edge_count()));

    int base = testutil::count_components(g);
    std::set<int> cuts(dec.cut_vertices.begin(), dec.cut_vertices.end());
    for (int v = 1; v <= g.vertex_count(); ++v) {
      VertexSet rest;
      for (int u = 1; u <= g.vertex_count(); ++u) {
        if (u != v) rest.push_back(u);
      }
      int after = testutil::count_components(induced_subgraph(g, rest).graph);
      // Removing the vertex also removes its singleton component slot.
      int delta = after - (base - (g.degree(v) == 0 ? 1 : 0));
      if (cuts.count(v)) {
        CHECK(delta > 0);
      } else {
        CHECK(delta <= 0);
      }
    }
  }
}

TEST_CASE("gallai tree recognition") {
  CHECK(is_gallai_tree(Graph::from_edges(1, {})));
  CHECK_FALSE(is_gallai_tree(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})));
  CHECK(is_gallai_tree(testutil::bowtie()));
  Graph k5 = Graph::from_edges(
      5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(is_gallai_tree(k5));
  CHECK_FALSE(is_gallai_tree(testutil::petersen()));

  // A larger mixed example: triangle, K4 and C5 glued along cut vertices
  // with tree edges.
  Graph fig = Graph::from_edges(
      13, {{1, 2}, {2, 3}, {1, 3},                                  // triangle
           {3, 4},                                                  // bridge
           {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4},                  // C5
           {8, 9},                                                  // bridge
           {9, 10}, {9, 11}, {9, 12}, {10, 11}, {10, 12}, {11, 12}, // K4
           {12, 13}});
  CHECK(is_gallai_tree(fig));

  // Even cycle inside spoils it.
  Graph bad = Graph::from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {4, 5}, {5, 6}});
  CHECK_FALSE(is_gallai_tree(bad));
}

TEST_CASE("gallai trees are closed under connected induced subgraphs") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = testutil::random_gallai_tree(4, seed);
    REQUIRE(is_gallai_tree(g));
    std::mt19937_64 rng(seed * 77);
    for (int trial = 0; trial < 10; ++trial) {
      // Random connected subset grown from a random start.
      int start = 1 + static_cast<int>(rng() % g.vertex_count());
      VertexSet subset{start};
      std::set<int> in{start};
      for (int step = 0; step < 6; ++step) {
        int v = subset[rng() % subset.size()];
        auto nbrs = g.neighbors(v);
        if (nbrs.empty()) continue;
        int w = nbrs[rng() % nbrs.size()];
        if (in.insert(w).second) subset.push_back(w);
      }
      std::sort(subset.begin(), subset.end());
      CHECK(is_gallai_tree(induced_subgraph(g, subset).graph));
    }
  }
}

TEST_CASE("clique_at") {
  Graph k4 = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  auto got = clique_at(k4, 2, 4);
  REQUIRE(got.has_value());
  CHECK(*got == VertexSet{1, 2, 3, 4});

  Graph c5 = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  CHECK_FALSE(clique_at(c5, 1, 4).has_value());

  Graph k4_minus = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK_FALSE(clique_at(k4_minus, 1, 4).has_value());
  CHECK(clique_at(k4_minus, 1, 3).has_value());
}

TEST_CASE("edge list io round trip") {
  Graph g = testutil::petersen();
  std::stringstream buffer;
  write_edge_list(buffer, g);
  Graph back = read_edge_list(buffer);
  CHECK(g == back);

  std::stringstream with_comments("# a graph\n3 2\n1 2\n# middle\n2 3\n");
  Graph small = read_edge_list(with_comments);
  CHECK(small.vertex_count() == 3);
  CHECK(small.edge_count() == 2);

  std::stringstream truncated("3 2\n1 2\n");
  CHECK_THROWS_AS(read_edge_list(truncated), MalformedInputError);
}
