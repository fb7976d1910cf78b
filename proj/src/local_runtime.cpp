#include "madcolor/local_runtime.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "madcolor/classification.hpp"

namespace madcolor {

void RoundTranscript::charge(const std::string& label, long long rounds) {
  rounds_executed += rounds;
  for (auto& [name, count] : phases) {
    if (name == label) {
      count += rounds;
      return;
    }
  }
  phases.emplace_back(label, rounds);
}

long long RoundTranscript::phase_rounds(const std::string& label) const {
  for (const auto& [name, count] : phases) {
    if (name == label) return count;
  }
  return 0;
}

void RoundTranscript::merge(const RoundTranscript& other) {
  for (const auto& [name, count] : other.phases) charge(name, count);
  max_message_bytes = std::max(max_message_bytes, other.max_message_bytes);
}

int LocalView::index_of(int v) const {
  auto it = std::lower_bound(members.begin(), members.end(), v);
  if (it == members.end() || *it != v) return -1;
  return static_cast<int>(it - members.begin());
}

Subgraph LocalView::induced(int max_distance) const {
  VertexSet keep;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (distance[i] <= max_distance) keep.push_back(members[i]);
  }
  // Build on original ids, then relabel.
  std::map<int, int> new_id;
  for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i) + 1;
  std::vector<Edge> sub_edges;
  for (auto [u, v] : edges) {
    auto iu = new_id.find(u);
    auto iv = new_id.find(v);
    if (iu != new_id.end() && iv != new_id.end()) {
      sub_edges.emplace_back(iu->second, iv->second);
    }
  }
  Subgraph sub;
  sub.graph = Graph::from_edges(static_cast<int>(keep.size()), sub_edges);
  sub.to_original = std::move(keep);
  return sub;
}

LocalView gather_ball(const Graph& g, int v, int r, std::span<const long long> inputs) {
  LocalView view;
  view.center = v;
  view.radius = r;
  std::vector<int> dist(g.vertex_count() + 1, -1);
  std::deque<int> queue{v};
  dist[v] = 0;
  std::vector<int> order{v};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (dist[u] == r) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        order.push_back(w);
        queue.push_back(w);
      }
    }
  }
  std::sort(order.begin(), order.end());
  view.members = order;
  view.distance.reserve(order.size());
  view.g_degree.reserve(order.size());
  for (int u : order) {
    view.distance.push_back(dist[u]);
    view.g_degree.push_back(g.degree(u));
    view.input.push_back(static_cast<std::size_t>(u - 1) < inputs.size() ? inputs[u - 1] : 0);
  }
  for (int u : order) {
    if (dist[u] > r - 1) continue;
    for (int w : g.neighbors(u)) {
      // Every neighbor of a distance<=r-1 vertex is inside the ball.
      if (u < w || dist[w] > r - 1) view.edges.emplace_back(std::min(u, w), std::max(u, w));
    }
  }
  std::sort(view.edges.begin(), view.edges.end());
  view.edges.erase(std::unique(view.edges.begin(), view.edges.end()), view.edges.end());
  return view;
}

namespace {

// Full-knowledge flooding: every round each node broadcasts everything it
// knows. After r rounds this delivers exactly the radius-r view.
struct FloodProgram {
  struct Knowledge {
    // (id, degree, input) triples and known edges.
    std::vector<std::pair<int, std::pair<int, long long>>> verts;
    std::vector<Edge> edges;
  };
  using Message = Knowledge;
  struct Output {
    Knowledge knowledge;
    int center;
  };
  struct State {
    Knowledge known;
    int id;
  };

  int rounds;
  std::span<const long long> inputs;

  State init(const NodeContext& ctx) const {
    State s;
    s.id = ctx.id;
    long long input =
        static_cast<std::size_t>(ctx.id - 1) < inputs.size() ? inputs[ctx.id - 1] : 0;
    s.known.verts.push_back({ctx.id, {ctx.degree, input}});
    return s;
  }

  RoundAction<Message, Output> step(State& s, int round,
                                    std::span<const Received<Message>> inbox) const {
    for (const auto& msg : inbox) {
      // Receiving a message reveals the edge to its sender.
      s.known.edges.emplace_back(std::min(s.id, msg.from), std::max(s.id, msg.from));
      for (const auto& v : msg.payload.verts) s.known.verts.push_back(v);
      for (const auto& e : msg.payload.edges) s.known.edges.push_back(e);
    }
    std::sort(s.known.verts.begin(), s.known.verts.end());
    s.known.verts.erase(std::unique(s.known.verts.begin(), s.known.verts.end()),
                        s.known.verts.end());
    std::sort(s.known.edges.begin(), s.known.edges.end());
    s.known.edges.erase(std::unique(s.known.edges.begin(), s.known.edges.end()),
                        s.known.edges.end());
    RoundAction<Message, Output> action;
    if (round == rounds) {
      action.output = Output{s.known, s.id};
    } else {
      action.broadcast = s.known;
    }
    return action;
  }
};

}  // namespace

std::vector<LocalView> gather_balls_by_flooding(const Graph& g, int radius,
                                                std::span<const long long> inputs,
                                                RoundTranscript& transcript) {
  FloodProgram prog{radius, inputs};
  auto outputs = run_program(g, prog, radius + 1, transcript, "flood_gather");
  std::vector<LocalView> views;
  views.reserve(outputs.size());
  for (auto& out : outputs) {
    LocalView view;
    view.center = out.center;
    view.radius = radius;
    // Distances are computable from the known edges: every shortest path
    // to a vertex at distance <= r runs through vertices at distance
    // < r, whose edges are known.
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : out.knowledge.edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::map<int, int> dist;
    dist[out.center] = 0;
    std::deque<int> queue{out.center};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (!dist.count(w)) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    for (const auto& [id, meta] : out.knowledge.verts) {
      view.members.push_back(id);
      view.distance.push_back(dist.count(id) ? dist[id] : radius);
      view.g_degree.push_back(meta.first);
      view.input.push_back(meta.second);
    }
    view.edges = out.knowledge.edges;
    views.push_back(std::move(view));
  }
  return views;
}

long long default_round_cap(int n, int d, double c) {
  long long r = happy_radius(n, c);
  return 10 * r * r * (d + 1) * (d + 1) * (d + 1) * (d + 1) + 10000;
}

}  // namespace madcolor
