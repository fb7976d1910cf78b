#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "madcolor/graph.hpp"
#include "madcolor/sparse_coloring.hpp"

namespace madcolor {

// One configured run of a coloring algorithm over a generated graph.
struct RunSpec {
  std::string family;
  std::map<std::string, int> params;
  std::string algo = "sparse";  // sparse | nice | brooks
  int d = 0;                    // 0 when preset decides
  std::string preset;           // planar | planar-triangle-free | planar-girth6
                                // | arboricity:a | genus:g
  std::string lists = "random";  // random | uniform:k
  std::uint64_t seed = 1;
  std::optional<double> c_override;
  long long round_cap = 0;
};

// Flat result record; one per run. Columns are stable and documented in
// the README.
struct RunRecord {
  RunSpec spec;
  int n = 0;
  int m = 0;
  int effective_d = 0;
  double c = 0.0;
  std::string outcome;  // colored | clique | infeasible | error
  VertexSet clique;
  int iterations = 0;
  std::vector<double> happy_ratios;
  long long rounds_total = 0;
  std::vector<std::pair<std::string, long long>> rounds_by_phase;
  bool verdict_pass = false;
  std::string error;
};

// Resolves a preset name to a degree budget.
int preset_degree(const std::string& preset);

// Executes one run: generate, color, re-verify with the oracles.
RunRecord execute_run(const RunSpec& spec);

// Parses an experiment config (JSON) into run specs; "sizes" entries
// expand families with a single free size parameter.
std::vector<RunSpec> parse_experiment_config(const std::string& json_text);

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_records_json(std::ostream& out, const std::vector<RunRecord>& records);

}  // namespace madcolor
