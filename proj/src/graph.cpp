#include "madcolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "madcolor/errors.hpp"

namespace madcolor {

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw MalformedInputError("vertex id " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n_));
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw MalformedInputError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw MalformedInputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) {
      throw MalformedInputError("self-loop at vertex " + std::to_string(u));
    }
    g.adj_[u - 1].push_back(v);
    g.adj_[v - 1].push_back(u);
  }
  g.m_ = 0;
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.m_ += static_cast<int>(nbrs.size());
  }
  g.m_ /= 2;
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::max_degree() const {
  int d = 0;
  for (auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nbrs = adj_[u - 1];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 1; u <= n_; ++u) {
    for (int v : adj_[u - 1]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return static_cast<int>(ball(*this, 1, n_).size()) == n_;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> comps;
  std::vector<bool> seen(n_ + 1, false);
  for (int s = 1; s <= n_; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int w : adj_[u - 1]) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int Graph::eccentricity(int v) const {
  check_vertex(v);
  std::vector<int> dist(n_ + 1, -1);
  std::deque<int> queue{v};
  dist[v] = 0;
  int ecc = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    ecc = std::max(ecc, dist[u]);
    for (int w : adj_[u - 1]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return ecc;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  VertexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> new_id(g.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int v = sorted[i];
    if (v < 1 || v > g.vertex_count()) {
      throw MalformedInputError("subset vertex " + std::to_string(v) + " not in host graph");
    }
    new_id[v] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (int v : sorted) {
    for (int w : g.neighbors(v)) {
      if (v < w && new_id[w] != 0) edges.emplace_back(new_id[v], new_id[w]);
    }
  }
  Subgraph sub;
  sub.graph = Graph::from_edges(static_cast<int>(sorted.size()), edges);
  sub.to_original = std::move(sorted);
  return sub;
}

VertexSet ball(const Graph& g, int v, int r) {
  if (r < 0) throw ContractError("negative ball radius");
  if (v < 1 || v > g.vertex_count()) {
    throw MalformedInputError("ball center " + std::to_string(v) + " not a vertex");
  }
  std::vector<int> dist(g.vertex_count() + 1, -1);
  std::deque<int> queue{v};
  dist[v] = 0;
  VertexSet members{v};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (dist[u] == r) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        members.push_back(w);
        queue.push_back(w);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

VertexSet ball_within(const Graph& g, const VertexSet& r_set, int v, int radius) {
  if (radius < 0) throw ContractError("negative ball radius");
  std::vector<bool> in_r(g.vertex_count() + 1, false);
  for (int u : r_set) in_r[u] = true;
  if (v < 1 || v > g.vertex_count() || !in_r[v]) return {};
  std::vector<int> dist(g.vertex_count() + 1, -1);
  std::deque<int> queue{v};
  dist[v] = 0;
  VertexSet members{v};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (dist[u] == radius) continue;
    for (int w : g.neighbors(u)) {
      if (in_r[w] && dist[w] < 0) {
        dist[w] = dist[u] + 1;
        members.push_back(w);
        queue.push_back(w);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

// Iterative Hopcroft-Tarjan biconnectivity. Pushes tree/back edges on a
// stack and pops one block's worth whenever a cut condition triggers.
struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low, parent;
  std::vector<bool> is_cut;
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> blocks;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph),
        disc(graph.vertex_count() + 1, -1),
        low(graph.vertex_count() + 1, 0),
        parent(graph.vertex_count() + 1, 0),
        is_cut(graph.vertex_count() + 1, false) {}

  void pop_block(const Edge& until) {
    VertexSet verts;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(e.first);
      verts.push_back(e.second);
      if (e == until) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    blocks.push_back(std::move(verts));
  }

  void run(int root) {
    struct Frame {
      int v;
      std::size_t next = 0;
    };
    std::vector<Frame> stack{{root}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      int v = f.v;
      auto nbrs = g.neighbors(v);
      if (f.next < nbrs.size()) {
        int w = nbrs[f.next++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          edge_stack.push_back({v, w});
          if (v == root) ++root_children;
          stack.push_back({w});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int u = stack.back().v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] >= disc[u]) {
            if (u != root || root_children > 1) is_cut[u] = true;
            pop_block({u, v});
          }
        }
      }
    }
    if (root_children == 0 && g.degree(root) == 0) {
      blocks.push_back({root});
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  BlockFinder finder(g);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (finder.disc[v] < 0) finder.run(v);
  }
  BlockDecomposition out;
  out.blocks = std::move(finder.blocks);
  std::sort(out.blocks.begin(), out.blocks.end());
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (finder.is_cut[v]) out.cut_vertices.push_back(v);
  }
  std::vector<bool> cut(g.vertex_count() + 1, false);
  for (int v : out.cut_vertices) cut[v] = true;
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    for (int v : out.blocks[b]) {
      if (cut[v]) out.block_cut_tree.emplace_back(static_cast<int>(b), v);
    }
  }
  return out;
}

namespace {

int edges_within(const Graph& g, const VertexSet& verts) {
  std::vector<bool> in(g.vertex_count() + 1, false);
  for (int v : verts) in[v] = true;
  int count = 0;
  for (int v : verts) {
    for (int w : g.neighbors(v)) {
      if (w > v && in[w]) ++count;
    }
  }
  return count;
}

}  // namespace

bool is_gallai_tree(const Graph& g) {
  auto dec = block_decomposition(g);
  for (const auto& block : dec.blocks) {
    auto b = static_cast<int>(block.size());
    int m = edges_within(g, block);
    if (m == b * (b - 1) / 2) continue;  // clique (covers edges and single vertices)
    if (b >= 3 && b % 2 == 1 && m == b) {
      // A 2-connected block with as many edges as vertices and all inner
      // degrees 2 is a cycle; odd length makes it acceptable.
      std::vector<bool> in(g.vertex_count() + 1, false);
      for (int v : block) in[v] = true;
      bool cycle = true;
      for (int v : block) {
        int deg = 0;
        for (int w : g.neighbors(v)) {
          if (in[w]) ++deg;
        }
        if (deg != 2) {
          cycle = false;
          break;
        }
      }
      if (cycle) continue;
    }
    return false;
  }
  return true;
}

namespace {

bool extend_clique(const Graph& g, VertexSet& current, const std::vector<int>& candidates,
                   std::size_t start, int q) {
  if (static_cast<int>(current.size()) == q) return true;
  for (std::size_t i = start; i < candidates.size(); ++i) {
    int c = candidates[i];
    if (static_cast<int>(current.size()) + static_cast<int>(candidates.size() - i) < q) break;
    bool ok = true;
    for (int v : current) {
      if (!g.has_edge(v, c)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    current.push_back(c);
    if (extend_clique(g, current, candidates, i + 1, q)) return true;
    current.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexSet> clique_at(const Graph& g, int v, int q) {
  if (q < 1) throw ContractError("clique size must be at least 1");
  if (g.degree(v) + 1 < q) return std::nullopt;
  std::vector<int> candidates(g.neighbors(v).begin(), g.neighbors(v).end());
  VertexSet current{v};
  if (!extend_clique(g, current, candidates, 0, q)) return std::nullopt;
  std::sort(current.begin(), current.end());
  return current;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos) continue;
      if (line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_data_line(header)) throw MalformedInputError("empty edge-list input");
  std::istringstream hs(header);
  long long n = 0, m = 0;
  if (!(hs >> n >> m) || n < 0 || m < 0) {
    throw MalformedInputError("bad edge-list header: expected \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    std::string data;
    if (!next_data_line(data)) {
      throw MalformedInputError("edge-list ended after " + std::to_string(i) + " of " +
                                std::to_string(m) + " edges");
    }
    std::istringstream es(data);
    int u = 0, v = 0;
    if (!(es >> u >> v)) throw MalformedInputError("bad edge line: " + data);
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw MalformedInputError("cannot open " + path + " for writing");
  write_edge_list(out, g);
}

}  // namespace madcolor
