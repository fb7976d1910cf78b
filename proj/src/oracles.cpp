#include "madcolor/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "madcolor/errors.hpp"

namespace madcolor {

int happy_radius(int n, double c) {
  if (n <= 1) return 0;
  return static_cast<int>(std::ceil(c * std::log2(static_cast<double>(n))));
}

std::vector<Edge> check_proper(const Graph& g, const PartialColoring& col) {
  std::vector<Edge> bad;
  for (auto [u, v] : g.edges()) {
    if (col.is_colored(u) && col.is_colored(v) && col.color(u) == col.color(v)) {
      bad.emplace_back(u, v);
    }
  }
  return bad;
}

ListViolations check_list(const Graph& g, const PartialColoring& col,
                          const ListAssignment& lists) {
  ListViolations out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (col.is_colored(v) && !lists.contains(v, col.color(v))) out.off_list.push_back(v);
  }
  out.improper = check_proper(g, col);
  return out;
}

namespace {

// k-colorability backtracking on vertices in id order, with the standard
// first-use symmetry break (a vertex may use at most one fresh color).
bool k_colorable(const Graph& g, int k) {
  int n = g.vertex_count();
  std::vector<int> color(n + 1, 0);
  struct Frame {
    int v;
    int c;
    int max_used;
  };
  std::vector<Frame> stack;
  stack.push_back({1, 0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.v > n) return true;
    int limit = std::min(k, f.max_used + 1);
    int next = f.c + 1;
    bool advanced = false;
    for (int c = next; c <= limit; ++c) {
      bool ok = true;
      for (int w : g.neighbors(f.v)) {
        if (color[w] == c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        f.c = c;
        color[f.v] = c;
        stack.push_back({f.v + 1, 0, std::max(f.max_used, c)});
        advanced = true;
        break;
      }
      f.c = c;
    }
    if (!advanced) {
      color[f.v] = 0;
      stack.pop_back();
    }
  }
  return false;
}

int greedy_upper_bound(const Graph& g) {
  int best = 0;
  std::vector<int> color(g.vertex_count() + 1, 0);
  for (int v = 1; v <= g.vertex_count(); ++v) {
    std::vector<bool> used(g.degree(v) + 2, false);
    for (int w : g.neighbors(v)) {
      if (color[w] > 0 && color[w] <= g.degree(v) + 1) used[color[w]] = true;
    }
    int c = 1;
    while (used[c]) ++c;
    color[v] = c;
    best = std::max(best, c);
  }
  return best;
}

int greedy_clique_lower_bound(const Graph& g) {
  int best = g.vertex_count() > 0 ? 1 : 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    VertexSet clique{v};
    for (int w : g.neighbors(v)) {
      bool ok = true;
      for (int u : clique) {
        if (!g.has_edge(u, w)) {
          ok = false;
          break;
        }
      }
      if (ok) clique.push_back(w);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace

int brute_chromatic(const Graph& g, int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceededError("brute_chromatic: " + std::to_string(g.vertex_count()) +
                           " vertices exceed cap " + std::to_string(cap));
  }
  if (g.vertex_count() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  int lb = greedy_clique_lower_bound(g);
  int ub = greedy_upper_bound(g);
  for (int k = lb; k < ub; ++k) {
    if (k_colorable(g, k)) return k;
  }
  return ub;
}

namespace {

bool extend_list_coloring(const Graph& g, const ListAssignment& lists, PartialColoring& col,
                          int v) {
  if (v > g.vertex_count()) return true;
  for (int c : lists.at(v)) {
    bool ok = true;
    for (int w : g.neighbors(v)) {
      if (w < v && col.color(w) == c) {
        ok = false;
        break;
      }
    }
    if (ok) {
      col.set(v, c);
      if (extend_list_coloring(g, lists, col, v + 1)) return true;
    }
  }
  col.clear(v);
  return false;
}

}  // namespace

std::optional<PartialColoring> brute_list_colorable(const Graph& g, const ListAssignment& lists,
                                                    int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceededError("brute_list_colorable: " + std::to_string(g.vertex_count()) +
                           " vertices exceed cap " + std::to_string(cap));
  }
  if (lists.vertex_count() != g.vertex_count()) {
    throw ContractError("list assignment does not match graph size");
  }
  PartialColoring col(g.vertex_count());
  if (extend_list_coloring(g, lists, col, 1)) return col;
  return std::nullopt;
}

namespace {

// Dinic max-flow on a small network; capacities are int64.
class Dinic {
 public:
  explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_edge(int u, int v, long long cap) {
    edges_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({u, head_[v], 0});
    head_[v] = static_cast<int>(edges_.size()) - 1;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      long long pushed;
      while ((pushed = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += pushed;
    }
    return flow;
  }

  // Vertices reachable from s in the residual graph (the source side of
  // a minimum cut); call after max_flow.
  std::vector<bool> min_cut_side(int s) {
    std::vector<bool> side(head_.size(), false);
    std::deque<int> queue{s};
    side[s] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e = head_[u]; e >= 0; e = edges_[e].next) {
        if (edges_[e].cap > 0 && !side[edges_[e].to]) {
          side[edges_[e].to] = true;
          queue.push_back(edges_[e].to);
        }
      }
    }
    return side;
  }

 private:
  struct EdgeRec {
    int to;
    int next;
    long long cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int e = head_[u]; e >= 0; e = edges_[e].next) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          queue.push_back(edges_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(int u, int t, long long limit) {
    if (u == t || limit == 0) return limit;
    for (int& e = it_[u]; e >= 0; e = edges_[e].next) {
      int v = edges_[e].to;
      if (edges_[e].cap > 0 && level_[v] == level_[u] + 1) {
        long long pushed = dfs(v, t, std::min(limit, edges_[e].cap));
        if (pushed > 0) {
          edges_[e].cap -= pushed;
          edges_[e ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
  std::vector<EdgeRec> edges_;
};

// Max over vertex subsets S of |E(S)| - (a/b)|S| is m - mincut/b in the
// network below. Returns the maximizing subset when a strictly positive
// candidate exists.
//
// Optionally forces one vertex into S (used to exclude the empty set).
struct DensityTest {
  const Graph& g;
  std::vector<Edge> edge_list;

  explicit DensityTest(const Graph& graph) : g(graph), edge_list(graph.edges()) {}

  // True iff some subgraph has |E(H)|/|V(H)| > a/b; fills subset.
  bool denser_than(long long a, long long b, VertexSet& subset) const {
    int n = g.vertex_count();
    int m = static_cast<int>(edge_list.size());
    int source = 0, sink = m + n + 1;
    Dinic flow(m + n + 2);
    const long long inf = (static_cast<long long>(m) * b) + a * n + 1;
    for (int e = 0; e < m; ++e) {
      flow.add_edge(source, 1 + e, b);
      flow.add_edge(1 + e, m + edge_list[e].first, inf);
      flow.add_edge(1 + e, m + edge_list[e].second, inf);
    }
    for (int v = 1; v <= n; ++v) flow.add_edge(m + v, sink, a);
    long long cut = flow.max_flow(source, sink);
    if (cut >= static_cast<long long>(m) * b) return false;
    auto side = flow.min_cut_side(source);
    subset.clear();
    for (int v = 1; v <= n; ++v) {
      if (side[m + v]) subset.push_back(v);
    }
    return true;
  }

  // Max over subsets S containing `forced` of |E(S)| - lambda*|S|
  // (lambda integer). Used by the arboricity bound.
  long long best_with_forced(long long lambda, int forced) const {
    int n = g.vertex_count();
    int m = static_cast<int>(edge_list.size());
    int source = 0, sink = m + n + 1;
    Dinic flow(m + n + 2);
    const long long inf = static_cast<long long>(m) + lambda * n + 1;
    for (int e = 0; e < m; ++e) {
      flow.add_edge(source, 1 + e, 1);
      flow.add_edge(1 + e, m + edge_list[e].first, inf);
      flow.add_edge(1 + e, m + edge_list[e].second, inf);
    }
    for (int v = 1; v <= n; ++v) flow.add_edge(m + v, sink, v == forced ? 0 : lambda);
    long long cut = flow.max_flow(source, sink);
    // Forcing v makes its sink capacity 0, which removes lambda from the
    // objective; add it back.
    return static_cast<long long>(m) - cut - lambda;
  }
};

}  // namespace

Rational mad_exact(const Graph& g, int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceededError("mad_exact: " + std::to_string(g.vertex_count()) +
                           " vertices exceed cap " + std::to_string(cap));
  }
  if (g.edge_count() == 0) return Rational(0, 1);
  DensityTest test(g);
  // Roughly locate the densest subgraph with a floating binary search,
  // then confirm exactly at the best density seen. Distinct subgraph
  // densities differ by at least 1/n^2, so the confirmation loop moves
  // strictly upward and terminates.
  double lo = 0.0, hi = static_cast<double>(g.edge_count());
  VertexSet best;
  test.denser_than(0, 1, best);  // any edge makes density > 0
  for (int iter = 0; iter < 60 && hi - lo > 1e-12; ++iter) {
    double mid = (lo + hi) / 2;
    long long den = 2LL * g.vertex_count();
    auto num = static_cast<long long>(mid * static_cast<double>(den));
    VertexSet cand;
    if (test.denser_than(num, den, cand)) {
      lo = mid;
      best = std::move(cand);
    } else {
      hi = mid;
    }
  }
  while (true) {
    Subgraph sub = induced_subgraph(g, best);
    long long p = sub.graph.edge_count();
    long long q = sub.graph.vertex_count();
    VertexSet denser;
    if (!test.denser_than(p, q, denser)) {
      return Rational(2 * p, q);
    }
    best = std::move(denser);
  }
}

Rational mad_bruteforce(const Graph& g, int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceededError("mad_bruteforce: graph exceeds cap " + std::to_string(cap));
  }
  int n = g.vertex_count();
  std::vector<std::uint32_t> row(n, 0);
  for (auto [u, v] : g.edges()) {
    row[u - 1] |= 1u << (v - 1);
    row[v - 1] |= 1u << (u - 1);
  }
  Rational best(0, 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int verts = __builtin_popcount(mask);
    long long edges = 0;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) edges += __builtin_popcount(row[v] & mask);
    }
    edges /= 2;
    Rational density(2 * edges, verts);
    if (best < density) best = density;
  }
  return best;
}

int nash_williams_arboricity_bound(const Graph& g, int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceededError("nash_williams_arboricity_bound: graph exceeds cap " +
                           std::to_string(cap));
  }
  if (g.edge_count() == 0) return 0;
  DensityTest test(g);
  int a = 1;
  while (true) {
    // Is there H with |V(H)| >= 2 and |E(H)| > a(|V(H)|-1), i.e. bound > a?
    long long lambda = a;
    bool found = false;
    for (int v = 1; v <= g.vertex_count() && !found; ++v) {
      // max over S containing v of |E(S)| - a|S| >= 1 - a certifies it;
      // forcing v excludes the empty set from the maximization.
      if (test.best_with_forced(lambda, v) >= 1 - lambda) found = true;
    }
    if (!found) return a;
    ++a;
  }
}

Classification happy_oracle(const Graph& g, int d, double c, int n_for_radius) {
  if (d < 3) throw ContractError("happy_oracle requires d >= 3");
  int n = g.vertex_count();
  Classification cls;
  cls.d = d;
  cls.c = c;
  cls.radius = happy_radius(n_for_radius > 0 ? n_for_radius : n, c);
  for (int v = 1; v <= n; ++v) {
    (g.degree(v) <= d ? cls.rich : cls.poor).push_back(v);
  }
  for (int v : cls.rich) {
    VertexSet members = ball_within(g, cls.rich, v, cls.radius);
    bool low_degree = false;
    for (int w : members) {
      if (g.degree(w) <= d - 1) {
        low_degree = true;
        break;
      }
    }
    bool is_happy = low_degree || !is_gallai_tree(induced_subgraph(g, members).graph);
    (is_happy ? cls.happy : cls.sad).push_back(v);
  }
  return cls;
}

}  // namespace madcolor
