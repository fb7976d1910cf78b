#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "madcolor/errors.hpp"
#include "madcolor/graph.hpp"

namespace madcolor {

// Labeled round counters for one simulated run. rounds_executed is always
// the sum of the phase counters.
struct RoundTranscript {
  long long rounds_executed = 0;
  std::vector<std::pair<std::string, long long>> phases;
  std::size_t max_message_bytes = 0;

  void charge(const std::string& label, long long rounds);
  long long phase_rounds(const std::string& label) const;
  void merge(const RoundTranscript& other);
};

// What a node knows at program start: its own id, n, and its degree.
// Neighbor identities only arrive through received messages.
struct NodeContext {
  int id = 0;
  int n = 0;
  int degree = 0;
};

// One received message together with the id of the sending neighbor.
template <class M>
struct Received {
  int from;
  M payload;
};

// A node's action for one round: an optional broadcast to all neighbors
// and an optional final output (returning an output halts the node).
template <class M, class O>
struct RoundAction {
  std::optional<M> broadcast;
  std::optional<O> output;
};

// A node program supplies:
//   using Message = ...;  using Output = ...;  struct State {...};
//   State init(const NodeContext&) const;
//   RoundAction<Message, Output> step(State&, int round,
//                                     std::span<const Received<Message>> inbox) const;
// Handlers must be pure functions of their arguments; the engine then
// guarantees bit-identical reruns. step is first called at round 0 with
// an empty inbox; messages broadcast at round r arrive at round r+1.
//
// Runs the program on every vertex of g until all nodes halt. Throws
// DivergenceError when rounds exceed round_cap.
template <class Prog>
std::vector<typename Prog::Output> run_program(const Graph& g, const Prog& prog,
                                               long long round_cap, RoundTranscript& transcript,
                                               const std::string& phase_label) {
  using M = typename Prog::Message;
  using O = typename Prog::Output;
  int n = g.vertex_count();
  std::vector<typename Prog::State> states;
  states.reserve(n);
  for (int v = 1; v <= n; ++v) {
    states.push_back(prog.init(NodeContext{v, n, g.degree(v)}));
  }
  std::vector<std::optional<O>> outputs(n);
  std::vector<std::optional<M>> outbox(n);
  std::vector<std::vector<Received<M>>> inbox(n);
  int halted = 0;
  long long round = 0;
  for (;; ++round) {
    if (round > round_cap) {
      std::vector<int> pending;
      for (int v = 1; v <= n; ++v) {
        if (!outputs[v - 1].has_value()) pending.push_back(v);
      }
      throw DivergenceError("round cap " + std::to_string(round_cap) + " exceeded in phase " +
                                phase_label,
                            pending);
    }
    for (int v = 1; v <= n; ++v) {
      if (outputs[v - 1].has_value()) continue;
      auto action = prog.step(states[v - 1], static_cast<int>(round),
                              std::span<const Received<M>>(inbox[v - 1]));
      outbox[v - 1] = std::move(action.broadcast);
      if (action.output.has_value()) {
        outputs[v - 1] = std::move(action.output);
        ++halted;
      }
    }
    if (halted == n) break;
    for (auto& box : inbox) box.clear();
    for (int v = 1; v <= n; ++v) {
      if (!outbox[v - 1].has_value()) continue;
      std::size_t bytes = sizeof(M);
      if constexpr (requires(const M& m) { Prog::message_bytes(m); }) {
        bytes = Prog::message_bytes(*outbox[v - 1]);
      }
      transcript.max_message_bytes = std::max(transcript.max_message_bytes, bytes);
      for (int w : g.neighbors(v)) {
        inbox[w - 1].push_back({v, *outbox[v - 1]});
      }
      outbox[v - 1].reset();
    }
  }
  transcript.charge(phase_label, round);
  std::vector<O> out;
  out.reserve(n);
  for (auto& o : outputs) out.push_back(std::move(*o));
  return out;
}

// What a node has learned after gathering its ball of radius r: the ids,
// degrees and declared inputs of all vertices at distance at most r, and
// every edge incident to a vertex at distance at most r-1. Edges between
// two vertices at distance exactly r are not yet known at round r.
struct LocalView {
  int center = 0;
  int radius = 0;
  std::vector<int> members;   // sorted original ids
  std::vector<int> distance;  // aligned with members
  std::vector<int> g_degree;  // aligned with members; degree in the host graph
  std::vector<long long> input;  // aligned with members
  std::vector<Edge> edges;       // known edges, endpoints in members, u < v

  int index_of(int v) const;
  // The induced subgraph on members within the given distance (must be
  // at most radius-1 for edge knowledge to be complete, or radius if the
  // view was gathered with one extra round).
  Subgraph induced(int max_distance) const;
};

// Direct construction of the radius-r view of v: exactly what r rounds
// of full-knowledge flooding deliver.
LocalView gather_ball(const Graph& g, int v, int r, std::span<const long long> inputs = {});

// Runs a ball program: every node gathers its radius-r view and maps it
// through compute. Costs exactly r rounds. Equivalent to flooding the
// local knowledge for r rounds, which tests verify on small graphs.
template <class Output, class Compute>
std::vector<Output> run_ball_program(const Graph& g, int radius, Compute&& compute,
                                     RoundTranscript& transcript, const std::string& phase_label,
                                     std::span<const long long> inputs = {}) {
  std::vector<Output> out;
  out.reserve(g.vertex_count());
  for (int v = 1; v <= g.vertex_count(); ++v) {
    out.push_back(compute(gather_ball(g, v, radius, inputs)));
  }
  transcript.charge(phase_label, radius);
  return out;
}

// Reference flooding implementation of ball gathering, built on
// run_program. Exponentially more expensive; used to validate
// gather_ball and the locality semantics of the engine.
std::vector<LocalView> gather_balls_by_flooding(const Graph& g, int radius,
                                                std::span<const long long> inputs,
                                                RoundTranscript& transcript);

// Default round budget for a full run, generous against the expected
// polylogarithmic counts.
long long default_round_cap(int n, int d, double c);

}  // namespace madcolor
