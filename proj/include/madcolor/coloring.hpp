#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "madcolor/graph.hpp"

namespace madcolor {

// Per-vertex finite sets of color identifiers (opaque integers).
// Every vertex of the host graph has an entry; sets are sorted and
// duplicate-free.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(int n) : lists_(n) {}

  int vertex_count() const { return static_cast<int>(lists_.size()); }
  void set(int v, std::vector<int> colors);
  const std::vector<int>& at(int v) const { return lists_[v - 1]; }
  int size_of(int v) const { return static_cast<int>(lists_[v - 1].size()); }
  bool contains(int v, int color) const;
  int min_size() const;

 private:
  std::vector<std::vector<int>> lists_;
};

// Per-vertex optional color; the object every algorithm produces and
// refines.
class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(int n) : colors_(n) {}

  int vertex_count() const { return static_cast<int>(colors_.size()); }
  bool is_colored(int v) const { return colors_[v - 1].has_value(); }
  int color(int v) const { return *colors_[v - 1]; }
  std::optional<int> get(int v) const { return colors_[v - 1]; }
  void set(int v, int color) { colors_[v - 1] = color; }
  void clear(int v) { colors_[v - 1].reset(); }
  int colored_count() const;
  bool is_full() const { return colored_count() == vertex_count(); }

  friend bool operator==(const PartialColoring& a, const PartialColoring& b) {
    return a.colors_ == b.colors_;
  }

 private:
  std::vector<std::optional<int>> colors_;
};

// Uniform lists {1..k} on every vertex.
ListAssignment uniform_lists(int n, int k);

// Random lists of the given size, drawn without replacement from
// {1..universe}. Each vertex gets its own generator seeded from
// (seed, vertex id), so assignments are reproducible and independent of
// iteration order.
ListAssignment random_lists(int n, int size, int universe, std::uint64_t seed);

// List-assignment text format: one line per vertex, "v: c1 c2 c3 ...".
ListAssignment read_lists(std::istream& in, int n);
ListAssignment read_lists_file(const std::string& path, int n);
void write_lists(std::ostream& out, const ListAssignment& lists);

// Coloring text format: lines "v c"; uncolored vertices are omitted.
PartialColoring read_coloring(std::istream& in, int n);
PartialColoring read_coloring_file(const std::string& path, int n);
void write_coloring(std::ostream& out, const PartialColoring& col);
void write_coloring_file(const std::string& path, const PartialColoring& col);

// Deterministic stream of pseudo-random values derived from a seed; used
// wherever reproducible choices are needed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace madcolor
