#include "madcolor/sparse_coloring.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "madcolor/errors.hpp"
#include "madcolor/gallai_solver.hpp"
#include "madcolor/oracles.hpp"
#include "madcolor/subroutines.hpp"

namespace madcolor {

namespace {

// Shared classifier: rich vertices are those within the degree budget,
// and a rich vertex is happy when its radius-r ball inside the
// rich-induced subgraph reaches a budget-slack vertex or is not a Gallai
// tree. Balls that swallow their whole component are classified once per
// component; that shortcut is what keeps the default (large) radius fast
// and is invisible in the output.
template <class RichFn, class SlackFn>
Classification classify_impl(const Graph& g, int d, double c, int n_for_radius,
                             RichFn&& is_rich, SlackFn&& has_slack) {
  int n = g.vertex_count();
  Classification cls;
  cls.d = d;
  cls.c = c;
  cls.radius = happy_radius(n_for_radius > 0 ? n_for_radius : n, c);
  std::vector<bool> rich(n + 1, false);
  for (int v = 1; v <= n; ++v) {
    if (is_rich(v)) {
      rich[v] = true;
      cls.rich.push_back(v);
    } else {
      cls.poor.push_back(v);
    }
  }
  std::vector<bool> happy(n + 1, false);
  std::vector<bool> seen(n + 1, false);
  for (int start : cls.rich) {
    if (seen[start]) continue;
    // Component of start in g[rich], with eccentricity from start.
    VertexSet comp;
    std::vector<int> dist(n + 1, -1);
    std::deque<int> queue{start};
    dist[start] = 0;
    int ecc = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      seen[u] = true;
      ecc = std::max(ecc, dist[u]);
      for (int w : g.neighbors(u)) {
        if (rich[w] && dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    if (2 * ecc <= cls.radius) {
      // Every ball inside this component is the whole component.
      bool slack = false;
      for (int v : comp) {
        if (has_slack(v)) {
          slack = true;
          break;
        }
      }
      bool comp_happy = slack || !is_gallai_tree(induced_subgraph(g, comp).graph);
      if (comp_happy) {
        for (int v : comp) happy[v] = true;
      }
      continue;
    }
    for (int v : comp) {
      VertexSet members = ball_within(g, cls.rich, v, cls.radius);
      bool slack = false;
      for (int w : members) {
        if (has_slack(w)) {
          slack = true;
          break;
        }
      }
      happy[v] = slack || !is_gallai_tree(induced_subgraph(g, members).graph);
    }
  }
  for (int v : cls.rich) {
    (happy[v] ? cls.happy : cls.sad).push_back(v);
  }
  return cls;
}

Classification classify_nice(const Graph& g, const ListAssignment& lists, double c,
                             RoundTranscript& transcript, int n_for_radius) {
  auto cls = classify_impl(
      g, g.max_degree(), c, n_for_radius, [](int) { return true; },
      [&](int v) { return lists.size_of(v) > g.degree(v); });
  transcript.charge("classify", cls.radius + 1);
  return cls;
}

}  // namespace

Classification classify(const Graph& g, int d, double c, RoundTranscript& transcript,
                        int n_for_radius) {
  if (d < 3) throw ContractError("classify requires d >= 3");
  auto cls = classify_impl(
      g, d, c, n_for_radius, [&](int v) { return g.degree(v) <= d; },
      [&](int v) { return g.degree(v) <= d - 1; });
  transcript.charge("classify", cls.radius + 1);
  return cls;
}

double PeelingTrace::min_happy_ratio() const {
  double best = 1.0;
  for (const auto& it : per_iteration) {
    if (it.n > 0) best = std::min(best, static_cast<double>(it.happy) / it.n);
  }
  return best;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PartialColoring extend_to_happy(const Graph& g, const Classification& cls,
                                const PartialColoring& col, const ListAssignment& lists,
                                RoundTranscript& transcript, bool per_vertex_budget) {
  int n = g.vertex_count();
  std::vector<bool> in_happy(n + 1, false);
  for (int v : cls.happy) in_happy[v] = true;
  for (int v = 1; v <= n; ++v) {
    if (in_happy[v] && col.is_colored(v)) {
      throw ContractError("vertex " + std::to_string(v) + " is happy but already colored");
    }
    if (!in_happy[v] && !col.is_colored(v)) {
      throw ContractError("vertex " + std::to_string(v) + " must be colored before extension");
    }
  }
  {
    auto bad = check_list(g, col, lists);
    if (!bad.ok()) {
      int offender = !bad.off_list.empty() ? bad.off_list.front() : bad.improper.front().first;
      throw ContractError("input coloring invalid at vertex " + std::to_string(offender));
    }
  }
  if (cls.happy.empty()) return col;

  // Forest over the rich-induced subgraph, rooted so that roots are
  // pairwise far apart relative to the classification radius.
  Subgraph rich_sub = induced_subgraph(g, cls.rich);
  std::vector<int> rich_local(n + 1, 0);
  for (int v = 1; v <= rich_sub.graph.vertex_count(); ++v) rich_local[rich_sub.original_id(v)] = v;
  VertexSet happy_local;
  for (int v : cls.happy) happy_local.push_back(rich_local[v]);
  std::sort(happy_local.begin(), happy_local.end());
  int k = std::max(1, 2 * cls.radius);
  RulingForest forest = ruling_forest(rich_sub.graph, happy_local, k, transcript);

  PartialColoring out = col;
  std::vector<bool> in_tree(n + 1, false);
  VertexSet tree_orig;
  for (int v : forest.members) {
    int orig = rich_sub.original_id(v);
    in_tree[orig] = true;
    tree_orig.push_back(orig);
  }
  for (int v : tree_orig) out.clear(v);  // uncolor the sad part of the forest

  // Pruned lists for the forest subgraph: drop the colors of finished
  // neighbors outside it.
  Subgraph tree_sub = induced_subgraph(g, tree_orig);
  int tn = tree_sub.graph.vertex_count();
  ListAssignment tree_lists(tn);
  for (int v = 1; v <= tn; ++v) {
    int orig = tree_sub.original_id(v);
    std::vector<int> list = lists.at(orig);
    for (int w : g.neighbors(orig)) {
      if (!in_tree[w] && out.is_colored(w)) std::erase(list, out.color(w));
    }
    tree_lists.set(v, list);
  }

  // Schedule classes: a proper coloring of the forest subgraph, used only
  // to serialize the greedy sweep.
  int class_budget = per_vertex_budget ? std::max(tree_sub.graph.max_degree(), 1) : cls.d;
  PartialColoring classes = plus_one_coloring(tree_sub.graph, class_budget, transcript);
  int num_classes = class_budget + 1;

  // Leaf-to-root sweep: depth levels from the deepest up, class by class;
  // every vertex still has its parent uncolored when its slot comes.
  std::vector<int> depth_of(tn + 1, -1);
  int max_depth = 0;
  for (std::size_t i = 0; i < forest.members.size(); ++i) {
    int orig = rich_sub.original_id(forest.members[i]);
    int local = 0;
    auto it = std::lower_bound(tree_sub.to_original.begin(), tree_sub.to_original.end(), orig);
    local = static_cast<int>(it - tree_sub.to_original.begin()) + 1;
    depth_of[local] = forest.depth[i];
    max_depth = std::max(max_depth, forest.depth[i]);
  }
  std::vector<std::vector<int>> by_depth(max_depth + 1);
  for (int v = 1; v <= tn; ++v) by_depth[depth_of[v]].push_back(v);
  for (int depth = max_depth; depth >= 1; --depth) {
    for (int cl = 1; cl <= num_classes; ++cl) {
      for (int v : by_depth[depth]) {
        if (classes.color(v) != cl) continue;
        int orig = tree_sub.original_id(v);
        int chosen = 0;
        for (int c : tree_lists.at(v)) {
          bool used = false;
          for (int w : g.neighbors(orig)) {
            if (in_tree[w] && out.is_colored(w) && out.color(w) == c) {
              used = true;
              break;
            }
          }
          if (!used) {
            chosen = c;
            break;
          }
        }
        if (chosen == 0) {
          throw ContractError("sweep exhausted the list of vertex " + std::to_string(orig));
        }
        out.set(orig, chosen);
      }
    }
  }
  transcript.charge("extend_sweep", static_cast<long long>(max_depth) * num_classes);

  // Root balls: uncolor them completely and solve each centrally. Balls
  // that touch or share vertices are solved as one unit so the pieces
  // stay independent.
  std::vector<bool> in_rich(n + 1, false);
  for (int v : cls.rich) in_rich[v] = true;
  std::vector<int> roots_orig;
  for (int r : forest.roots) roots_orig.push_back(rich_sub.original_id(r));
  std::sort(roots_orig.begin(), roots_orig.end());
  int nballs = static_cast<int>(roots_orig.size());
  std::vector<VertexSet> balls(nballs);
  std::vector<std::vector<int>> balls_of(n + 1);
  for (int i = 0; i < nballs; ++i) {
    balls[i] = ball_within(g, cls.rich, roots_orig[i], cls.radius);
    for (int v : balls[i]) balls_of[v].push_back(i);
  }
  DisjointSets sets(nballs);
  for (int v = 1; v <= n; ++v) {
    for (std::size_t i = 1; i < balls_of[v].size(); ++i) {
      sets.unite(balls_of[v][0], balls_of[v][i]);
    }
  }
  for (auto [u, v] : g.edges()) {
    if (!balls_of[u].empty() && !balls_of[v].empty()) {
      sets.unite(balls_of[u][0], balls_of[v][0]);
    }
  }
  std::vector<VertexSet> clusters(nballs);
  for (int i = 0; i < nballs; ++i) {
    auto& cluster = clusters[sets.find(i)];
    cluster.insert(cluster.end(), balls[i].begin(), balls[i].end());
  }
  long long solve_rounds = 0;
  for (int ci = 0; ci < nballs; ++ci) {
    VertexSet& cluster = clusters[ci];
    if (cluster.empty()) continue;
    std::sort(cluster.begin(), cluster.end());
    cluster.erase(std::unique(cluster.begin(), cluster.end()), cluster.end());
    std::vector<bool> in_cluster(n + 1, false);
    for (int v : cluster) in_cluster[v] = true;
    for (int v : cluster) out.clear(v);
    Subgraph sub = induced_subgraph(g, cluster);
    ListAssignment sub_lists(sub.graph.vertex_count());
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
      int orig = sub.original_id(v);
      std::vector<int> list = lists.at(orig);
      for (int w : g.neighbors(orig)) {
        if (!in_cluster[w] && out.is_colored(w)) std::erase(list, out.color(w));
      }
      sub_lists.set(v, list);
    }
    auto solved = degree_list_color(sub.graph, sub_lists);
    if (std::holds_alternative<NotDegreeChoosable>(solved)) {
      throw ContractError("root ball solve failed; the root was not actually happy");
    }
    const auto& sub_col = std::get<PartialColoring>(solved);
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
      out.set(sub.original_id(v), sub_col.color(v));
    }
    // The root gathers its cluster and redistributes the answer.
    int root_local = 0;
    for (int i = 0; i < nballs; ++i) {
      if (sets.find(i) == ci) {
        auto it = std::lower_bound(sub.to_original.begin(), sub.to_original.end(), roots_orig[i]);
        root_local = static_cast<int>(it - sub.to_original.begin()) + 1;
        break;
      }
    }
    solve_rounds = std::max(
        solve_rounds, 2LL * (sub.graph.eccentricity(root_local) + 1));
  }
  transcript.charge("extend_ball_solve", solve_rounds);

  for (int v = 1; v <= n; ++v) {
    if (!out.is_colored(v)) {
      throw ContractError("extension left vertex " + std::to_string(v) + " uncolored");
    }
  }
  return out;
}

namespace {

VertexSet map_to_original(const VertexSet& local, const Subgraph& sub) {
  VertexSet out;
  out.reserve(local.size());
  for (int v : local) out.push_back(sub.original_id(v));
  return out;
}

int low_degree_in_sad(const Graph& gi, const Classification& cls, int budget) {
  std::vector<bool> in_sad(gi.vertex_count() + 1, false);
  for (int v : cls.sad) in_sad[v] = true;
  int count = 0;
  for (int v : cls.sad) {
    int deg = 0;
    for (int w : gi.neighbors(v)) {
      if (in_sad[w]) ++deg;
    }
    if (deg <= budget - 1) ++count;
  }
  return count;
}

// Greedy coloring for graphs too small for the full machinery.
PartialColoring tiny_greedy(const Graph& g, const ListAssignment& lists) {
  PartialColoring col(g.vertex_count());
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int chosen = 0;
    for (int c : lists.at(v)) {
      bool used = false;
      for (int w : g.neighbors(v)) {
        if (col.is_colored(w) && col.color(w) == c) {
          used = true;
          break;
        }
      }
      if (!used) {
        chosen = c;
        break;
      }
    }
    if (chosen == 0) throw ContractError("list exhausted on a trivial instance");
    col.set(v, chosen);
  }
  return col;
}

struct PeelSnapshot {
  VertexSet alive;
  Classification cls_orig;  // in original ids
};

void note_bound(PeelingTrace& trace, bool enforce, const std::string& message) {
  if (enforce) throw BoundViolationError(message);
  trace.warnings.push_back(message);
}

}  // namespace

SparseResult color_sparse(const Graph& g, int d, const ListAssignment& lists,
                          const SparseConfig& config) {
  if (d < 3) throw ContractError("color_sparse requires d >= 3");
  if (lists.vertex_count() != g.vertex_count()) {
    throw ContractError("list assignment does not match graph");
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (lists.size_of(v) < d) {
      throw ContractError("list of vertex " + std::to_string(v) + " has fewer than " +
                          std::to_string(d) + " colors");
    }
  }
  SparseResult result;
  int n = g.vertex_count();
  if (n <= 2) {
    result.coloring = tiny_greedy(g, lists);
    return result;
  }
  int d_eff = std::min(d, n);
  double c = config.coefficient();
  long long cap = config.round_cap > 0 ? config.round_cap : default_round_cap(n, d_eff, c);

  auto clique = find_clique(g, d_eff, result.transcript);
  if (clique.has_value()) {
    result.outcome = SparseOutcome::CliqueFound;
    result.clique = std::move(*clique);
    return result;
  }

  bool enforce = config.enforce_bounds();
  std::vector<PeelSnapshot> snapshots;
  VertexSet alive(n);
  std::iota(alive.begin(), alive.end(), 1);
  while (!alive.empty()) {
    Subgraph sub = induced_subgraph(g, alive);
    Classification local = classify(sub.graph, d_eff, c, result.transcript, n);
    Classification orig;
    orig.d = local.d;
    orig.c = local.c;
    orig.radius = local.radius;
    orig.rich = map_to_original(local.rich, sub);
    orig.poor = map_to_original(local.poor, sub);
    orig.happy = map_to_original(local.happy, sub);
    orig.sad = map_to_original(local.sad, sub);

    IterationStats stats;
    stats.n = static_cast<int>(alive.size());
    stats.happy = static_cast<int>(local.happy.size());
    stats.sad = static_cast<int>(local.sad.size());
    stats.poor = static_cast<int>(local.poor.size());
    stats.low_degree_in_sad = low_degree_in_sad(sub.graph, local, d_eff);
    result.trace.per_iteration.push_back(stats);
    ++result.trace.iterations;

    if (stats.happy == 0) {
      throw ProgressStallError(
          "no happy vertices among " + std::to_string(stats.n) +
          " remaining; the maximum average degree likely exceeds d = " + std::to_string(d_eff));
    }
    long long d3 = 27LL * d_eff * d_eff * d_eff;
    if (static_cast<long long>(stats.happy) * d3 < stats.n) {
      note_bound(result.trace, enforce,
                 "happy-set bound violated: " + std::to_string(stats.happy) + " * (3d)^3 < " +
                     std::to_string(stats.n));
    }
    if (stats.poor == 0 &&
        static_cast<long long>(stats.happy) * (12LL * d_eff + 1) < stats.n) {
      note_bound(result.trace, enforce,
                 "poor-free happy bound violated: " + std::to_string(stats.happy) +
                     " * (12d+1) < " + std::to_string(stats.n));
    }
    if (12LL * stats.low_degree_in_sad < stats.sad) {
      note_bound(result.trace, enforce,
                 "sad low-degree bound violated: " + std::to_string(stats.low_degree_in_sad) +
                     " * 12 < " + std::to_string(stats.sad));
    }
    if (static_cast<long long>(stats.poor) * (d_eff + 1) >
        static_cast<long long>(d_eff) * stats.n) {
      note_bound(result.trace, enforce,
                 "poor-count bound violated: " + std::to_string(stats.poor) + " poor among " +
                     std::to_string(stats.n));
    }

    snapshots.push_back({alive, std::move(orig)});
    std::vector<bool> removed(n + 1, false);
    for (int v : snapshots.back().cls_orig.happy) removed[v] = true;
    VertexSet next;
    next.reserve(alive.size());
    for (int v : alive) {
      if (!removed[v]) next.push_back(v);
    }
    alive = std::move(next);
    if (result.transcript.rounds_executed > cap) {
      throw DivergenceError("peeling exceeded the round budget", alive);
    }
  }

  double shrink = std::log2(1.0 / (1.0 - 1.0 / (27.0 * d_eff * d_eff * d_eff)));
  double iter_bound = std::log2(static_cast<double>(n)) / shrink;
  if (result.trace.iterations > iter_bound + 1e-9) {
    note_bound(result.trace, enforce,
               "iteration count " + std::to_string(result.trace.iterations) +
                   " exceeds the peeling bound " + std::to_string(iter_bound));
  }

  // Reverse extension: color the last peel first.
  PartialColoring col(n);
  for (auto it = snapshots.rbegin(); it != snapshots.rend(); ++it) {
    Subgraph sub = induced_subgraph(g, it->alive);
    std::vector<int> local_of(n + 1, 0);
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) local_of[sub.original_id(v)] = v;
    Classification local;
    local.d = it->cls_orig.d;
    local.c = it->cls_orig.c;
    local.radius = it->cls_orig.radius;
    for (int v : it->cls_orig.rich) local.rich.push_back(local_of[v]);
    for (int v : it->cls_orig.poor) local.poor.push_back(local_of[v]);
    for (int v : it->cls_orig.happy) local.happy.push_back(local_of[v]);
    for (int v : it->cls_orig.sad) local.sad.push_back(local_of[v]);
    for (auto* set : {&local.rich, &local.poor, &local.happy, &local.sad}) {
      std::sort(set->begin(), set->end());
    }
    PartialColoring sub_col(sub.graph.vertex_count());
    ListAssignment sub_lists(sub.graph.vertex_count());
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
      int orig = sub.original_id(v);
      if (col.is_colored(orig)) sub_col.set(v, col.color(orig));
      sub_lists.set(v, lists.at(orig));
    }
    PartialColoring extended =
        extend_to_happy(sub.graph, local, sub_col, sub_lists, result.transcript);
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
      col.set(sub.original_id(v), extended.color(v));
    }
    if (result.transcript.rounds_executed > cap) {
      throw DivergenceError("extension exceeded the round budget", it->alive);
    }
  }

  auto bad = check_list(g, col, lists);
  if (!bad.ok()) {
    throw CheckerViolationError("final coloring failed verification");
  }
  result.coloring = std::move(col);
  return result;
}

std::vector<int> nice_violations(const Graph& g, const ListAssignment& lists) {
  std::vector<int> offenders;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int need = g.degree(v);
    bool upgrade = g.degree(v) <= 2;
    if (!upgrade) {
      upgrade = true;
      auto nbrs = g.neighbors(v);
      for (std::size_t i = 0; i < nbrs.size() && upgrade; ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
          if (!g.has_edge(nbrs[i], nbrs[j])) {
            upgrade = false;
            break;
          }
        }
      }
    }
    if (upgrade) ++need;
    if (lists.size_of(v) < need) offenders.push_back(v);
  }
  return offenders;
}

NiceResult color_nice(const Graph& g, const ListAssignment& lists, const SparseConfig& config) {
  auto offenders = nice_violations(g, lists);
  if (!offenders.empty()) {
    std::string msg = "list assignment is not nice at vertices";
    for (std::size_t i = 0; i < offenders.size() && i < 8; ++i) {
      msg += " " + std::to_string(offenders[i]);
    }
    throw ContractError(msg);
  }
  NiceResult result;
  int n = g.vertex_count();
  if (n <= 2) {
    result.coloring = tiny_greedy(g, lists);
    return result;
  }
  double c = config.coefficient();
  long long cap = config.round_cap > 0 ? config.round_cap
                                       : default_round_cap(n, std::max(3, g.max_degree()), c);

  std::vector<PeelSnapshot> snapshots;
  VertexSet alive(n);
  std::iota(alive.begin(), alive.end(), 1);
  while (!alive.empty()) {
    Subgraph sub = induced_subgraph(g, alive);
    ListAssignment sub_lists(sub.graph.vertex_count());
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
      sub_lists.set(v, lists.at(sub.original_id(v)));
    }
    Classification local = classify_nice(sub.graph, sub_lists, c, result.transcript, n);
    Classification orig;
    orig.d = local.d;
    orig.c = local.c;
    orig.radius = local.radius;
    orig.rich = map_to_original(local.rich, sub);
    orig.happy = map_to_original(local.happy, sub);
    orig.sad = map_to_original(local.sad, sub);

    IterationStats stats;
    stats.n = static_cast<int>(alive.size());
    stats.happy = static_cast<int>(local.happy.size());
    stats.sad = static_cast<int>(local.sad.size());
    result.trace.per_iteration.push_back(stats);
    ++result.trace.iterations;
    if (stats.happy == 0) {
      throw ProgressStallError("no happy vertices among " + std::to_string(stats.n) +
                               " remaining under the nice-list budget");
    }

    snapshots.push_back({alive, std::move(orig)});
    std::vector<bool> removed(n + 1, false);
    for (int v : snapshots.back().cls_orig.happy) removed[v] = true;
    VertexSet next;
    for (int v : alive) {
      if (!removed[v]) next.push_back(v);
    }
    alive = std::move(next);
    if (result.transcript.rounds_executed > cap) {
      throw DivergenceError("peeling exceeded the round budget", alive);
    }
  }

  PartialColoring col(n);
  for (auto it = snapshots.rbegin(); it != snapshots.rend(); ++it) {
    Subgraph sub = induced_subgraph(g, it->alive);
    std::vector<int> local_of(n + 1, 0);
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) local_of[sub.original_id(v)] = v;
    Classification local;
    local.d = it->cls_orig.d;
    local.c = it->cls_orig.c;
    local.radius = it->cls_orig.radius;
    for (int v : it->cls_orig.rich) local.rich.push_back(local_of[v]);
    for (int v : it->cls_orig.happy) local.happy.push_back(local_of[v]);
    for (int v : it->cls_orig.sad) local.sad.push_back(local_of[v]);
    for (auto* set : {&local.rich, &local.happy, &local.sad}) {
      std::sort(set->begin(), set->end());
    }
    PartialColoring sub_col(sub.graph.vertex_count());
    ListAssignment sub_lists(sub.graph.vertex_count());
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
      int orig = sub.original_id(v);
      if (col.is_colored(orig)) sub_col.set(v, col.color(orig));
      sub_lists.set(v, lists.at(orig));
    }
    PartialColoring extended = extend_to_happy(sub.graph, local, sub_col, sub_lists,
                                               result.transcript, /*per_vertex_budget=*/true);
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
      col.set(sub.original_id(v), extended.color(v));
    }
  }

  auto bad = check_list(g, col, lists);
  if (!bad.ok()) throw CheckerViolationError("nice coloring failed verification");
  result.coloring = std::move(col);
  return result;
}

BrooksResult brooks_list(const Graph& g, int delta, const ListAssignment& lists,
                         const SparseConfig& config) {
  if (delta < 3) throw ContractError("brooks_list requires delta >= 3");
  if (g.max_degree() > delta) {
    throw ContractError("graph has a vertex of degree above delta");
  }
  if (lists.vertex_count() != g.vertex_count()) {
    throw ContractError("list assignment does not match graph");
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (lists.size_of(v) < delta) {
      throw ContractError("list of vertex " + std::to_string(v) + " has fewer than " +
                          std::to_string(delta) + " colors");
    }
  }
  BrooksResult result;
  int n = g.vertex_count();
  PartialColoring col(n);
  VertexSet rest;
  for (const auto& comp : g.components()) {
    bool complete_delta = static_cast<int>(comp.size()) == delta + 1;
    if (complete_delta) {
      Subgraph sub = induced_subgraph(g, comp);
      int size = sub.graph.vertex_count();
      complete_delta = 2LL * sub.graph.edge_count() == static_cast<long long>(size) * (size - 1);
      if (complete_delta) {
        ListAssignment sub_lists(size);
        for (int v = 1; v <= size; ++v) sub_lists.set(v, lists.at(sub.original_id(v)));
        auto solved = clique_list_color(sub.graph, sub_lists);
        if (std::holds_alternative<CliqueInfeasible>(solved)) {
          result.outcome = BrooksOutcome::Infeasible;
          result.infeasible_component = comp;
          return result;
        }
        const auto& sub_col = std::get<PartialColoring>(solved);
        for (int v = 1; v <= size; ++v) col.set(sub.original_id(v), sub_col.color(v));
        continue;
      }
    }
    rest.insert(rest.end(), comp.begin(), comp.end());
  }
  if (!rest.empty()) {
    std::sort(rest.begin(), rest.end());
    Subgraph sub = induced_subgraph(g, rest);
    ListAssignment sub_lists(sub.graph.vertex_count());
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
      sub_lists.set(v, lists.at(sub.original_id(v)));
    }
    NiceResult nice = color_nice(sub.graph, sub_lists, config);
    result.trace = std::move(nice.trace);
    result.transcript.merge(nice.transcript);
    for (int v = 1; v <= sub.graph.vertex_count(); ++v) {
      col.set(sub.original_id(v), nice.coloring.color(v));
    }
  }
  auto bad = check_list(g, col, lists);
  if (!bad.ok()) throw CheckerViolationError("brooks coloring failed verification");
  result.coloring = std::move(col);
  return result;
}

}  // namespace madcolor
