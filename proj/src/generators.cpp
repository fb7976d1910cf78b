#include "madcolor/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "madcolor/coloring.hpp"
#include "madcolor/errors.hpp"
#include "madcolor/oracles.hpp"

namespace madcolor {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw MalformedInputError(message);
}

void self_check(bool ok, const std::string& message) {
  if (!ok) throw Error("generator self-check failed: " + message);
}

bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    for (int w : g.neighbors(u)) {
      if (w != v && g.has_edge(v, w)) return true;
    }
  }
  return false;
}

}  // namespace

Graph make_grid(int w, int h) {
  require(w >= 1 && h >= 1, "grid needs w,h >= 1");
  auto id = [&](int i, int j) { return i * w + j + 1; };
  std::vector<Edge> edges;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      if (j + 1 < w) edges.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < h) edges.push_back({id(i, j), id(i + 1, j)});
    }
  }
  return Graph::from_edges(w * h, edges);
}

Graph make_tri_grid(int w, int h) {
  require(w >= 1 && h >= 1, "tri_grid needs w,h >= 1");
  auto id = [&](int i, int j) { return i * w + j + 1; };
  std::vector<Edge> edges;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      if (j + 1 < w) edges.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < h) edges.push_back({id(i, j), id(i + 1, j)});
      if (i + 1 < h && j + 1 < w) edges.push_back({id(i, j), id(i + 1, j + 1)});
    }
  }
  return Graph::from_edges(w * h, edges);
}

Graph make_hex_grid(int w, int h) {
  require(w >= 2 && h >= 2, "hex_grid needs w,h >= 2");
  auto id = [&](int i, int j) { return i * w + j + 1; };
  std::vector<Edge> edges;
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      if (j + 1 < w) edges.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < h && (i + j) % 2 == 0) edges.push_back({id(i, j), id(i + 1, j)});
    }
  }
  Graph g = Graph::from_edges(w * h, edges);
  self_check(!has_triangle(g), "hex_grid must be triangle-free");
  return g;
}

Graph make_klein_grid(int k, int l) {
  require(k >= 3 && l >= 3, "klein_grid needs k,l >= 3");
  auto id = [&](int i, int j) { return i + k * j + 1; };
  std::vector<Edge> edges;
  for (int j = 0; j < l; ++j) {
    for (int i = 0; i < k; ++i) {
      edges.push_back({id(i, j), id((i + 1) % k, j)});  // vertical cycles
      if (j + 1 < l) {
        edges.push_back({id(i, j), id(i, j + 1)});
      } else {
        // Horizontal wrap with reversed orientation.
        edges.push_back({id(i, l - 1), id(k - 1 - i, 0)});
      }
    }
  }
  Graph g = Graph::from_edges(k * l, edges);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    self_check(g.degree(v) == 4, "klein_grid must be 4-regular");
  }
  return g;
}

Graph make_h_graph(int l) {
  require(l >= 1, "h_graph needs l >= 1");
  int cols = 2 * l;
  auto id = [&](int i, int j) { return i + 5 * j + 1; };
  std::vector<Edge> edges;
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < 5; ++i) {
      edges.push_back({id(i, j), id((i + 1) % 5, j)});
      if (j + 1 < cols) edges.push_back({id(i, j), id(i, j + 1)});
    }
  }
  Graph g = Graph::from_edges(5 * cols, edges);
  self_check(!has_triangle(g), "h_graph must be triangle-free");
  return g;
}

namespace {

// Triangulated annulus between a bottom cycle and a top cycle: bottom i
// connects upward to the circular interval [f(i), f(i+1)] of top
// indices, where f is non-decreasing and winds around the top exactly
// once. Produces |bottom| + |top| triangles.
void add_annulus_edges(std::vector<Edge>& edges, const std::vector<int>& bottom,
                       const std::vector<int>& top, const std::vector<int>& f) {
  int p = static_cast<int>(bottom.size());
  int q = static_cast<int>(top.size());
  for (int i = 0; i < p; ++i) {
    for (int j = f[i]; j <= f[i + 1]; ++j) {
      edges.push_back({bottom[i], top[((j % q) + q) % q]});
    }
  }
}

}  // namespace

Graph make_fisk(int m) {
  require(m >= 0, "fisk needs m >= 0");
  int w = 7 + 3 * m;  // gives n = 2w-1 = 13+6m, always 1 mod 3
  int n = 2 * w - 1;
  std::vector<int> row0(w), row1(w - 1);
  std::iota(row0.begin(), row0.end(), 1);
  std::iota(row1.begin(), row1.end(), w + 1);

  // Two triangulated annuli glue the rows into a torus. Interval shapes:
  // annulus A pinches one bottom vertex to a single up-neighbor, annulus
  // B gives one bottom vertex a triple. The shifts are searched so that
  // the degree deficits cancel everywhere except on two adjacent
  // vertices of the short row and no edge is used by both annuli.
  for (int shift_a = 0; shift_a < w - 1; ++shift_a) {
    for (int a = 0; a < w - 1; ++a) {
      for (int s = 0; s < w; ++s) {
        std::vector<int> fa(w + 1);
        for (int i = 0; i <= w - 2; ++i) fa[i] = i + shift_a;
        fa[w - 1] = w - 2 + shift_a;
        fa[w] = w - 1 + shift_a;
        std::vector<int> fb(w);
        for (int i = 0; i < w - 1; ++i) fb[i] = i + s + (i > a ? 1 : 0);
        fb[w - 1] = s + w;

        std::vector<Edge> edges;
        for (int i = 0; i < w; ++i) edges.push_back({row0[i], row0[(i + 1) % w]});
        for (int i = 0; i < w - 1; ++i) edges.push_back({row1[i], row1[(i + 1) % (w - 1)]});
        add_annulus_edges(edges, row0, row1, fa);
        add_annulus_edges(edges, row1, row0, fb);

        std::set<Edge> dedup;
        bool simple = true;
        for (auto [x, y] : edges) {
          if (x == y || !dedup.insert({std::min(x, y), std::max(x, y)}).second) {
            simple = false;
            break;
          }
        }
        if (!simple) continue;
        Graph g = Graph::from_edges(n, edges);
        if (g.edge_count() != 3 * n) continue;
        std::vector<int> odd;
        for (int v = 1; v <= n; ++v) {
          if (g.degree(v) % 2 == 1) odd.push_back(v);
        }
        if (odd.size() != 2 || !g.has_edge(odd[0], odd[1])) continue;
        return g;
      }
    }
  }
  throw Error("generator self-check failed: no valid fisk configuration found for m = " +
              std::to_string(m));
}

Graph make_forest_union(int a, int n, std::uint64_t seed) {
  require(a >= 1 && n >= 1, "forest_union needs a >= 1, n >= 1");
  std::set<Edge> used;
  std::vector<Edge> edges;
  std::vector<std::vector<Edge>> forests(a);
  for (int t = 0; t < a; ++t) {
    std::mt19937_64 rng(mix_seed(seed, 1000 + t));
    // Random recursive tree over a shuffled labeling; skip edges already
    // taken by earlier forests (the result stays a forest).
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    for (int i = n - 1; i > 0; --i) {
      std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
    }
    for (int i = 1; i < n; ++i) {
      int parent = order[rng() % static_cast<std::uint64_t>(i)];
      int child = order[i];
      Edge e{std::min(parent, child), std::max(parent, child)};
      if (used.insert(e).second) {
        edges.push_back(e);
        forests[t].push_back(e);
      }
    }
  }
  Graph g = Graph::from_edges(n, edges);
  // Arboricity <= a holds by construction; verify each part is acyclic.
  for (const auto& forest : forests) {
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (auto [u, v] : forest) {
      int ru = find(u), rv = find(v);
      self_check(ru != rv, "forest_union part must stay acyclic");
      parent[ru] = rv;
    }
  }
  return g;
}

Graph make_random_sparse(int n, int d, std::uint64_t seed) {
  require(n >= 1 && d >= 1, "random_sparse needs n >= 1, d >= 1");
  const int kMadCap = 40;
  if (n > kMadCap) {
    // Too big for exact rejection; build from edge-disjoint forests,
    // which keeps mad <= 2*floor(d/2) <= d.
    return make_forest_union(std::max(1, d / 2), n, seed);
  }
  long long target = static_cast<long long>(n) * (d - 1) / 2;
  std::vector<Edge> all_pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) all_pairs.push_back({u, v});
  }
  target = std::min<long long>(target, static_cast<long long>(all_pairs.size()));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::mt19937_64 rng(mix_seed(seed, 2000 + attempt));
    std::vector<Edge> pool = all_pairs;
    std::vector<Edge> chosen;
    for (long long i = 0; i < target; ++i) {
      std::uint64_t j = i + rng() % (pool.size() - i);
      std::swap(pool[i], pool[j]);
      chosen.push_back(pool[i]);
    }
    Graph g = Graph::from_edges(n, chosen);
    if (mad_exact(g, kMadCap) <= Rational(d, 1)) return g;
  }
  throw MalformedInputError("random_sparse could not hit mad <= d within 1000 attempts");
}

Graph make_path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({n, 1});
  return Graph::from_edges(n, edges);
}

Graph make_clique(int n) {
  require(n >= 1, "clique needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph make_star(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) edges.push_back({1, v});
  return Graph::from_edges(n, edges);
}

namespace {

int need(const std::map<std::string, int>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw MalformedInputError("missing generator parameter: " + key);
  return it->second;
}

}  // namespace

Graph generate(const std::string& family, const std::map<std::string, int>& params,
               std::uint64_t seed) {
  if (family == "grid") return make_grid(need(params, "w"), need(params, "h"));
  if (family == "tri_grid") return make_tri_grid(need(params, "w"), need(params, "h"));
  if (family == "hex_grid") return make_hex_grid(need(params, "w"), need(params, "h"));
  if (family == "klein_grid") return make_klein_grid(need(params, "k"), need(params, "l"));
  if (family == "h_graph") return make_h_graph(need(params, "l"));
  if (family == "fisk") return make_fisk(need(params, "m"));
  if (family == "forest_union") return make_forest_union(need(params, "a"), need(params, "n"), seed);
  if (family == "random_sparse") return make_random_sparse(need(params, "n"), need(params, "d"), seed);
  if (family == "path") return make_path(need(params, "n"));
  if (family == "cycle") return make_cycle(need(params, "n"));
  if (family == "clique") return make_clique(need(params, "n"));
  if (family == "star") return make_star(need(params, "n"));
  throw MalformedInputError("unknown graph family: " + family);
}

std::pair<int, int> power_of_two_dims(int n) {
  int bits = 0;
  while ((1 << bits) < n) ++bits;
  require((1 << bits) == n, "n must be a power of two");
  int half = bits / 2;
  return {1 << (bits - half), 1 << half};
}

}  // namespace madcolor
