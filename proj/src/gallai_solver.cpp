#include "madcolor/gallai_solver.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "madcolor/errors.hpp"

namespace madcolor {

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count() + 1, -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int smallest_free_color(const std::vector<int>& list, const Graph& g, int v,
                        const PartialColoring& col) {
  for (int c : list) {
    bool used = false;
    for (int w : g.neighbors(v)) {
      if (col.is_colored(w) && col.color(w) == c) {
        used = true;
        break;
      }
    }
    if (!used) return c;
  }
  return 0;
}

}  // namespace

PartialColoring reverse_bfs_greedy(const Graph& h, const ListAssignment& lists, int center,
                                   PartialColoring precolored) {
  auto dist = bfs_distances(h, center);
  std::vector<int> order;
  for (int v = 1; v <= h.vertex_count(); ++v) {
    if (dist[v] >= 0 && !precolored.is_colored(v)) order.push_back(v);
  }
  // Strictly decreasing distance; within a level, larger ids first. The
  // center comes last.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dist[a] != dist[b]) return dist[a] > dist[b];
    return a > b;
  });
  PartialColoring col = std::move(precolored);
  for (int v : order) {
    int c = smallest_free_color(lists.at(v), h, v, col);
    if (c == 0) {
      throw ContractError("reverse_bfs_greedy exhausted the list of vertex " + std::to_string(v));
    }
    col.set(v, c);
  }
  return col;
}

namespace {

// Copies the colors of sub-vertices back into host ids.
void merge_sub_coloring(const Subgraph& sub, const PartialColoring& sub_col,
                        PartialColoring& host_col) {
  for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
    if (sub_col.is_colored(v)) host_col.set(sub.original_id(v), sub_col.color(v));
  }
}

ListAssignment restrict_lists(const Subgraph& sub, const ListAssignment& lists) {
  ListAssignment out(sub.graph.vertex_count());
  for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
    out.set(v, lists.at(sub.original_id(v)));
  }
  return out;
}

bool block_is_clique(const Graph& g, const VertexSet& block) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (!g.has_edge(block[i], block[j])) return false;
    }
  }
  return true;
}

bool block_is_odd_cycle(const Graph& g, const VertexSet& block) {
  if (block.size() < 3 || block.size() % 2 == 0) return false;
  std::vector<bool> in(g.vertex_count() + 1, false);
  for (int v : block) in[v] = true;
  for (int v : block) {
    int deg = 0;
    for (int w : g.neighbors(v)) {
      if (in[w]) ++deg;
    }
    if (deg != 2) return false;
  }
  return true;
}

// Colors block \ {anchor} greedily in order of decreasing BFS distance
// from the anchor inside the block; the anchor must already be colored.
void color_block_from_anchor(const Graph& h, const ListAssignment& lists, const VertexSet& block,
                             int anchor, PartialColoring& col) {
  Subgraph sub = induced_subgraph(h, block);
  int anchor_local = 0;
  for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
    if (sub.original_id(v) == anchor) anchor_local = v;
  }
  auto dist = bfs_distances(sub.graph, anchor_local);
  std::vector<int> order;
  for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
    if (v != anchor_local) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dist[a] != dist[b]) return dist[a] > dist[b];
    return a > b;
  });
  for (int v : order) {
    int orig = sub.original_id(v);
    int c = smallest_free_color(lists.at(orig), h, orig, col);
    if (c == 0) {
      throw ContractError("block coloring exhausted the list of vertex " + std::to_string(orig));
    }
    col.set(orig, c);
  }
}

// Tight and not 2-connected: root the block-cut tree at a block that is
// neither a clique nor an odd cycle, color that block starting from one
// of its cut vertices (which has slack inside the block), then fill the
// remaining blocks outward.
PartialColoring color_via_block_tree(const Graph& h, const ListAssignment& lists,
                                     const BlockDecomposition& dec, int bad_block) {
  int nblocks = static_cast<int>(dec.blocks.size());
  std::vector<bool> is_cut(h.vertex_count() + 1, false);
  for (int v : dec.cut_vertices) is_cut[v] = true;

  // Pick the smallest cut vertex inside the bad block as the anchor.
  int anchor = 0;
  for (int v : dec.blocks[bad_block]) {
    if (is_cut[v]) {
      anchor = v;
      break;
    }
  }
  if (anchor == 0) throw ContractError("bad block without a cut vertex in a separable graph");

  PartialColoring col(h.vertex_count());
  // The anchor has more list colors than block neighbors, so a reverse
  // BFS within the bad block colors it completely, anchor last.
  {
    Subgraph sub = induced_subgraph(h, dec.blocks[bad_block]);
    int anchor_local = 0;
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
      if (sub.original_id(v) == anchor) anchor_local = v;
    }
    auto sub_col = reverse_bfs_greedy(sub.graph, restrict_lists(sub, lists), anchor_local,
                                      PartialColoring(sub.graph.vertex_count()));
    merge_sub_coloring(sub, sub_col, col);
  }

  // Walk the block-cut tree outward from the bad block. A block is ready
  // once its attachment cut vertex is colored; its other vertices always
  // keep an uncolored neighbor (their BFS parent) when colored.
  std::vector<std::vector<int>> blocks_of_cut(h.vertex_count() + 1);
  for (auto [b, v] : dec.block_cut_tree) blocks_of_cut[v].push_back(b);
  std::vector<bool> done(nblocks, false);
  done[bad_block] = true;
  std::deque<int> ready;
  auto schedule_neighbors = [&](int block_index) {
    for (int v : dec.blocks[block_index]) {
      if (!is_cut[v]) continue;
      for (int b : blocks_of_cut[v]) {
        if (!done[b]) ready.push_back(b);
      }
    }
  };
  schedule_neighbors(bad_block);
  while (!ready.empty()) {
    int b = ready.front();
    ready.pop_front();
    if (done[b]) continue;
    int attach = 0;
    for (int v : dec.blocks[b]) {
      if (col.is_colored(v)) {
        attach = v;
        break;
      }
    }
    if (attach == 0) {
      ready.push_back(b);  // attachment not colored yet; retry later
      continue;
    }
    color_block_from_anchor(h, lists, dec.blocks[b], attach, col);
    done[b] = true;
    schedule_neighbors(b);
  }
  return col;
}

// Tight and 2-connected (and neither a clique nor an odd cycle).
PartialColoring color_two_connected(const Graph& h, const ListAssignment& lists) {
  int n = h.vertex_count();
  // Split on an edge whose lists differ: color u outside L(v), then peel
  // toward v in h - u.
  for (auto [u, v] : h.edges()) {
    for (int swap = 0; swap < 2; ++swap) {
      int a = swap ? v : u;
      int b = swap ? u : v;
      for (int c : lists.at(a)) {
        if (!lists.contains(b, c)) {
          VertexSet rest;
          for (int w = 1; w <= n; ++w) {
            if (w != a) rest.push_back(w);
          }
          Subgraph sub = induced_subgraph(h, rest);
          PartialColoring pre(sub.graph.vertex_count());
          ListAssignment sub_lists(sub.graph.vertex_count());
          int b_local = 0;
          for (int w = 1; w <= sub.graph.vertex_count(); ++w) {
            int orig = sub.original_id(w);
            if (orig == b) b_local = w;
            std::vector<int> list = lists.at(orig);
            if (h.has_edge(orig, a)) std::erase(list, c);
            sub_lists.set(w, list);
          }
          auto sub_col = reverse_bfs_greedy(sub.graph, sub_lists, b_local, pre);
          PartialColoring col(n);
          col.set(a, c);
          merge_sub_coloring(sub, sub_col, col);
          return col;
        }
      }
    }
  }

  // All lists are equal, so the graph is regular with degree = list size.
  int s = lists.size_of(1);
  if (s == 2) {
    // A connected 2-regular graph is a cycle; the odd case was ruled out
    // before calling (it is a Gallai tree). Alternate the two colors.
    std::vector<int> dist = bfs_distances(h, 1);
    PartialColoring col(n);
    for (int v = 1; v <= n; ++v) {
      col.set(v, lists.at(1)[dist[v] % 2]);
    }
    if (n % 2 != 0) throw ContractError("odd cycle reached the two-connected tight branch");
    return col;
  }

  // Find y with non-adjacent neighbors x, z such that h - {x, z} is
  // connected; give x and z the same color and peel toward y.
  for (int y = 1; y <= n; ++y) {
    auto nbrs = h.neighbors(y);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        int x = nbrs[i], z = nbrs[j];
        if (h.has_edge(x, z)) continue;
        VertexSet rest;
        for (int w = 1; w <= n; ++w) {
          if (w != x && w != z) rest.push_back(w);
        }
        Subgraph sub = induced_subgraph(h, rest);
        if (!sub.graph.is_connected()) continue;
        int c = lists.at(x)[0];  // lists are all equal; take the smallest
        PartialColoring col(n);
        col.set(x, c);
        col.set(z, c);
        ListAssignment sub_lists(sub.graph.vertex_count());
        int y_local = 0;
        for (int w = 1; w <= sub.graph.vertex_count(); ++w) {
          int orig = sub.original_id(w);
          if (orig == y) y_local = w;
          std::vector<int> list = lists.at(orig);
          if (h.has_edge(orig, x) || h.has_edge(orig, z)) std::erase(list, c);
          sub_lists.set(w, list);
        }
        auto sub_col = reverse_bfs_greedy(sub.graph, sub_lists,
                                          y_local, PartialColoring(sub.graph.vertex_count()));
        merge_sub_coloring(sub, sub_col, col);
        return col;
      }
    }
  }
  throw ContractError(
      "no split vertex found in a regular, 2-connected, non-complete, non-cycle graph");
}

}  // namespace

DegreeListResult degree_list_color(const Graph& h, const ListAssignment& lists) {
  int n = h.vertex_count();
  if (n == 0) return PartialColoring(0);
  if (!h.is_connected()) throw ContractError("degree_list_color requires a connected graph");
  if (lists.vertex_count() != n) throw ContractError("list assignment does not match graph");
  for (int v = 1; v <= n; ++v) {
    if (lists.size_of(v) < h.degree(v)) {
      throw ContractError("list of vertex " + std::to_string(v) + " is smaller than its degree");
    }
  }

  // Slack case: peel from any vertex with more colors than neighbors.
  for (int v = 1; v <= n; ++v) {
    if (lists.size_of(v) > h.degree(v)) {
      return reverse_bfs_greedy(h, lists, v, PartialColoring(n));
    }
  }

  // All tight. Structure decides: a block that is neither a clique nor
  // an odd cycle must exist, or this is a Gallai tree and we stop.
  auto dec = block_decomposition(h);
  int bad_block = -1;
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    if (!block_is_clique(h, dec.blocks[b]) && !block_is_odd_cycle(h, dec.blocks[b])) {
      bad_block = static_cast<int>(b);
      break;
    }
  }
  if (bad_block < 0) return NotDegreeChoosable{};

  if (dec.blocks.size() == 1) return color_two_connected(h, lists);
  return color_via_block_tree(h, lists, dec, bad_block);
}

namespace {

// Kuhn's augmenting-path matching from vertices to colors.
bool try_assign(int v, const std::vector<std::vector<int>>& options, std::vector<int>& color_owner,
                std::vector<bool>& visited) {
  for (int ci : options[v]) {
    if (visited[ci]) continue;
    visited[ci] = true;
    if (color_owner[ci] < 0 || try_assign(color_owner[ci], options, color_owner, visited)) {
      color_owner[ci] = v;
      return true;
    }
  }
  return false;
}

}  // namespace

CliqueListResult clique_list_color(const Graph& k, const ListAssignment& lists) {
  int n = k.vertex_count();
  if (static_cast<long long>(k.edge_count()) * 2 != static_cast<long long>(n) * (n - 1)) {
    throw ContractError("clique_list_color requires a complete graph");
  }
  if (lists.vertex_count() != n) throw ContractError("list assignment does not match graph");
  // Collect the color universe.
  std::vector<int> universe;
  for (int v = 1; v <= n; ++v) {
    for (int c : lists.at(v)) universe.push_back(c);
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  std::vector<std::vector<int>> options(n);
  for (int v = 1; v <= n; ++v) {
    for (int c : lists.at(v)) {
      auto it = std::lower_bound(universe.begin(), universe.end(), c);
      options[v - 1].push_back(static_cast<int>(it - universe.begin()));
    }
  }
  std::vector<int> color_owner(universe.size(), -1);
  for (int v = 0; v < n; ++v) {
    std::vector<bool> visited(universe.size(), false);
    if (!try_assign(v, options, color_owner, visited)) return CliqueInfeasible{};
  }
  PartialColoring col(n);
  for (std::size_t ci = 0; ci < color_owner.size(); ++ci) {
    if (color_owner[ci] >= 0) col.set(color_owner[ci] + 1, universe[ci]);
  }
  return col;
}

}  // namespace madcolor
