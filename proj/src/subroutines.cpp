#include "madcolor/subroutines.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>

#include "madcolor/errors.hpp"

namespace madcolor {

namespace {

// Lexicographically smallest q-clique containing the view's center, if
// any, using only edges visible in the radius-2 view.
std::optional<VertexSet> clique_in_view(const LocalView& view, int q) {
  // Adjacency among the closed neighborhood of the center.
  std::vector<int> hood;
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : view.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  hood.push_back(view.center);
  for (int w : adj[view.center]) hood.push_back(w);
  std::sort(hood.begin(), hood.end());
  auto adjacent = [&](int a, int b) {
    const auto& nbrs = adj[a];
    return std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end();
  };
  VertexSet current{view.center};
  std::vector<int> cands;
  for (int w : hood) {
    if (w != view.center) cands.push_back(w);
  }
  // Depth-first over ascending candidates; the first full clique found is
  // the lexicographically smallest one containing the center.
  struct Searcher {
    const std::vector<int>& cands;
    int q;
    VertexSet& current;
    const std::function<bool(int, int)> adjacent;

    bool go(std::size_t start) {
      if (static_cast<int>(current.size()) == q) return true;
      for (std::size_t i = start; i < cands.size(); ++i) {
        if (static_cast<int>(current.size() + cands.size() - i) < q) return false;
        bool ok = true;
        for (int v : current) {
          if (!adjacent(v, cands[i])) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        current.push_back(cands[i]);
        if (go(i + 1)) return true;
        current.pop_back();
      }
      return false;
    }
  };
  Searcher searcher{cands, q, current, adjacent};
  if (!searcher.go(0)) return std::nullopt;
  std::sort(current.begin(), current.end());
  return current;
}

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, int d, RoundTranscript& transcript) {
  if (d < 3) throw ContractError("find_clique requires d >= 3");
  int q = d + 1;
  auto found = run_ball_program<std::optional<VertexSet>>(
      g, 2,
      [&](const LocalView& view) -> std::optional<VertexSet> {
        if (view.g_degree[view.index_of(view.center)] < q - 1) return std::nullopt;
        return clique_in_view(view, q);
      },
      transcript, "find_clique");
  std::optional<VertexSet> best;
  for (auto& clique : found) {
    if (!clique.has_value()) continue;
    if (!best.has_value() || *clique < *best) best = std::move(clique);
  }
  return best;
}

namespace {

bool is_prime(long long x) {
  if (x < 2) return false;
  for (long long p = 2; p * p <= x; ++p) {
    if (x % p == 0) return false;
  }
  return true;
}

long long next_prime(long long x) {
  while (!is_prime(x)) ++x;
  return x;
}

// One palette-reduction step: colors in [m] are mapped to polynomials of
// degree < k over F_q, and a node's new color is (a, p(a)) for an
// evaluation point a where it differs from all its neighbors. Needs
// q >= d(k-1)+1 and q^k >= m. New palette size is q^2.
struct ReductionStep {
  long long q = 0;
  int k = 0;
};

// The plan of reduction steps for an initial palette of size m on a
// graph of maximum degree d, followed by one-class-per-round greedy
// elimination down to d+1 colors. Pure in (m, d), so every node derives
// the identical schedule.
std::vector<ReductionStep> reduction_plan(long long m, int d) {
  std::vector<ReductionStep> steps;
  while (m > d + 1) {
    ReductionStep best{0, 0};
    for (int k = 2; k <= 40; ++k) {
      long long q = next_prime(std::max<long long>(static_cast<long long>(d) * (k - 1) + 1, 2));
      // Smallest prime with q^k >= m; for small q bump it further.
      while (true) {
        __int128 power = 1;
        bool enough = false;
        for (int i = 0; i < k; ++i) {
          power *= q;
          if (power >= m) {
            enough = true;
            break;
          }
        }
        if (enough) break;
        q = next_prime(q + 1);
      }
      if (best.q == 0 || q * q < best.q * best.q) best = {q, k};
    }
    if (best.q * best.q >= m) break;  // no further shrink possible
    steps.push_back(best);
    m = best.q * best.q;
  }
  return steps;
}

long long plan_final_palette(long long m, int d, const std::vector<ReductionStep>& steps) {
  for (const auto& s : steps) m = s.q * s.q;
  return m;
}

// Maps a color in [0, q^k) to its polynomial coefficients (base-q digits)
// and evaluates at a.
long long eval_poly(long long color, long long q, int k, long long a) {
  long long value = 0;
  long long power = 1;
  for (int i = 0; i < k; ++i) {
    long long coeff = color % q;
    color /= q;
    value = (value + coeff * power) % q;
    power = (power * a) % q;
  }
  return value;
}

struct PlusOneProgram {
  using Message = long long;  // current color, 0-based
  using Output = int;         // final color, 1-based
  struct State {
    long long color;
  };

  int d;
  long long n;
  std::vector<ReductionStep> steps;
  long long final_palette;

  State init(const NodeContext& ctx) const { return {static_cast<long long>(ctx.id - 1)}; }

  RoundAction<Message, Output> step(State& s, int round,
                                    std::span<const Received<Message>> inbox) const {
    RoundAction<Message, Output> action;
    int reduction_rounds = static_cast<int>(steps.size());
    long long elim_rounds = std::max<long long>(0, final_palette - (d + 1));
    int total_rounds = reduction_rounds + static_cast<int>(elim_rounds);
    if (round > 0 && round <= reduction_rounds) {
      const ReductionStep& st = steps[round - 1];
      // Find an evaluation point where this node's polynomial differs
      // from every neighbor's.
      for (long long a = 0; a < st.q; ++a) {
        long long mine = eval_poly(s.color, st.q, st.k, a);
        bool clash = false;
        for (const auto& msg : inbox) {
          if (msg.payload != s.color &&
              eval_poly(msg.payload, st.q, st.k, a) == mine) {
            clash = true;
            break;
          }
        }
        if (!clash) {
          s.color = a * st.q + mine;
          break;
        }
      }
    } else if (round > reduction_rounds && round <= total_rounds) {
      // Eliminate the highest remaining color this round.
      long long target = final_palette - 1 - (round - reduction_rounds - 1);
      if (s.color == target) {
        std::vector<bool> used(d + 2, false);
        for (const auto& msg : inbox) {
          if (msg.payload <= d) used[msg.payload] = true;
        }
        long long c = 0;
        while (used[c]) ++c;
        s.color = c;
      }
    }
    if (round == total_rounds) {
      action.output = static_cast<int>(s.color) + 1;
    } else {
      action.broadcast = s.color;
    }
    return action;
  }
};

}  // namespace

PartialColoring plus_one_coloring(const Graph& h, int d, RoundTranscript& transcript) {
  if (h.max_degree() > d) {
    throw ContractError("plus_one_coloring: maximum degree " + std::to_string(h.max_degree()) +
                        " exceeds d = " + std::to_string(d));
  }
  PlusOneProgram prog;
  prog.d = d;
  prog.n = h.vertex_count();
  prog.steps = reduction_plan(prog.n, d);
  prog.final_palette = plan_final_palette(prog.n, d, prog.steps);
  long long cap = static_cast<long long>(prog.steps.size()) +
                  std::max<long long>(0, prog.final_palette - (d + 1)) + 2;
  auto colors = run_program(h, prog, cap, transcript, "plus_one");
  PartialColoring col(h.vertex_count());
  for (int v = 1; v <= h.vertex_count(); ++v) col.set(v, colors[v - 1]);
  return col;
}

bool RulingForest::is_member(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

int RulingForest::member_index(int v) const {
  auto it = std::lower_bound(members.begin(), members.end(), v);
  if (it == members.end() || *it != v) return -1;
  return static_cast<int>(it - members.begin());
}

int RulingForest::max_depth() const {
  int best = 0;
  for (int d : depth) best = std::max(best, d);
  return best;
}

namespace {

// Multi-source BFS distances truncated at limit; -1 beyond the limit.
std::vector<int> truncated_distances(const Graph& g, const std::vector<int>& sources, int limit) {
  std::vector<int> dist(g.vertex_count() + 1, -1);
  std::deque<int> queue;
  for (int s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (dist[u] == limit) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int id_bits(int n) {
  int bits = 0;
  while ((1LL << bits) < n) ++bits;
  return bits;
}

}  // namespace

RulingForest ruling_forest(const Graph& h, const VertexSet& u, int k,
                           RoundTranscript& transcript) {
  if (k < 1) throw ContractError("ruling_forest requires k >= 1");
  for (int v : u) {
    if (v < 1 || v > h.vertex_count()) {
      throw MalformedInputError("target vertex " + std::to_string(v) + " not in graph");
    }
  }
  int n = h.vertex_count();
  int bits = id_bits(n);  // ids shifted to 0..n-1
  long long rounds = 0;

  // Candidate filtering, one id bit per stage, high to low. Candidates
  // whose bit is 1 survive only when no 0-side candidate is within
  // distance k-1. Survivors of all stages are pairwise >= k apart, and
  // every dropped vertex chains to a final root through at most `bits`
  // hops of length <= k-1.
  std::vector<int> candidates = u;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (int b = bits - 1; b >= 0; --b) {
    std::vector<int> zero_side, one_side;
    for (int v : candidates) {
      (((v - 1) >> b) & 1 ? one_side : zero_side).push_back(v);
    }
    rounds += k;
    if (zero_side.empty() || one_side.empty()) continue;
    auto dist = truncated_distances(h, zero_side, k - 1);
    std::vector<int> kept = zero_side;
    for (int v : one_side) {
      if (dist[v] < 0) kept.push_back(v);
    }
    std::sort(kept.begin(), kept.end());
    candidates = std::move(kept);
  }

  RulingForest forest;
  forest.roots = candidates;

  // Simultaneous truncated BFS from all roots; each vertex joins the
  // first wave to reach it, ties broken by smaller root id, then smaller
  // parent id.
  int beta = k * bits;
  std::vector<int> parent(n + 1, -1), depth(n + 1, -1), root_of(n + 1, 0);
  std::vector<int> frontier;
  for (int r : forest.roots) {
    parent[r] = 0;
    depth[r] = 0;
    root_of[r] = r;
    frontier.push_back(r);
  }
  int layer = 0;
  while (!frontier.empty() && layer < beta) {
    ++layer;
    // Deterministic adoption: collect (vertex, root, parent) claims and
    // keep the smallest per vertex.
    std::map<int, std::pair<int, int>> claims;
    for (int v : frontier) {
      for (int w : h.neighbors(v)) {
        if (depth[w] >= 0) continue;
        auto claim = std::make_pair(root_of[v], v);
        auto it = claims.find(w);
        if (it == claims.end() || claim < it->second) claims[w] = claim;
      }
    }
    if (claims.empty()) break;
    std::vector<int> next;
    for (const auto& [w, claim] : claims) {
      root_of[w] = claim.first;
      parent[w] = claim.second;
      depth[w] = layer;
      next.push_back(w);
    }
    frontier = std::move(next);
  }
  bool saturated = true;
  for (int v = 1; v <= n; ++v) {
    if (depth[v] < 0) saturated = false;
  }
  rounds += saturated ? layer : beta;
  transcript.charge("ruling_forest", rounds);

  for (int v = 1; v <= n; ++v) {
    if (depth[v] >= 0) forest.members.push_back(v);
  }
  for (int v : forest.members) {
    forest.parent.push_back(parent[v]);
    forest.depth.push_back(depth[v]);
    forest.root_of.push_back(root_of[v]);
  }
  for (int v : u) {
    if (!forest.is_member(v)) {
      throw ContractError("ruling forest failed to cover target vertex " + std::to_string(v));
    }
  }
  return forest;
}

std::vector<std::string> verify_ruling_forest(const Graph& h, const VertexSet& u, int k,
                                              const RulingForest& forest) {
  std::vector<std::string> problems;
  int n = h.vertex_count();
  int beta = k * id_bits(n);
  // (1) coverage
  for (int v : u) {
    if (!forest.is_member(v)) {
      problems.push_back("target vertex " + std::to_string(v) + " not covered");
    }
  }
  // (2) pairwise root distance in h, recomputed by plain BFS
  for (int r : forest.roots) {
    std::vector<int> dist(n + 1, -1);
    std::deque<int> queue{r};
    dist[r] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (dist[x] >= k - 1) continue;
      for (int w : h.neighbors(x)) {
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
      }
    }
    for (int other : forest.roots) {
      if (other != r && dist[other] >= 0) {
        problems.push_back("roots " + std::to_string(r) + " and " + std::to_string(other) +
                           " are at distance " + std::to_string(dist[other]) + " < " +
                           std::to_string(k));
      }
    }
  }
  // (3) tree structure: parent edges are graph edges, depths increment,
  // every member walks up to its root, depth bounded by beta
  for (std::size_t i = 0; i < forest.members.size(); ++i) {
    int v = forest.members[i];
    int p = forest.parent[i];
    if (forest.depth[i] > beta) {
      problems.push_back("vertex " + std::to_string(v) + " at depth " +
                         std::to_string(forest.depth[i]) + " > " + std::to_string(beta));
    }
    if (p == 0) {
      if (forest.depth[i] != 0 || forest.root_of[i] != v) {
        problems.push_back("malformed root record at vertex " + std::to_string(v));
      }
      continue;
    }
    if (!h.has_edge(v, p)) {
      problems.push_back("parent link " + std::to_string(v) + "->" + std::to_string(p) +
                         " is not an edge");
      continue;
    }
    int pi = forest.member_index(p);
    if (pi < 0) {
      problems.push_back("parent " + std::to_string(p) + " of " + std::to_string(v) +
                         " is not a member");
      continue;
    }
    if (forest.depth[i] != forest.depth[pi] + 1) {
      problems.push_back("depth of " + std::to_string(v) + " does not increment its parent's");
    }
    if (forest.root_of[i] != forest.root_of[pi]) {
      problems.push_back("vertex " + std::to_string(v) + " and its parent disagree on roots");
    }
  }
  return problems;
}

}  // namespace madcolor
