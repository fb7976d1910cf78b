#include "madcolor/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "madcolor/errors.hpp"

namespace madcolor {

void ListAssignment::set(int v, std::vector<int> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  lists_[v - 1] = std::move(colors);
}

bool ListAssignment::contains(int v, int color) const {
  const auto& list = lists_[v - 1];
  return std::binary_search(list.begin(), list.end(), color);
}

int ListAssignment::min_size() const {
  int best = lists_.empty() ? 0 : static_cast<int>(lists_[0].size());
  for (const auto& list : lists_) best = std::min(best, static_cast<int>(list.size()));
  return best;
}

int PartialColoring::colored_count() const {
  int count = 0;
  for (const auto& c : colors_) {
    if (c.has_value()) ++count;
  }
  return count;
}

ListAssignment uniform_lists(int n, int k) {
  if (k < 0) throw MalformedInputError("negative list size");
  std::vector<int> palette(k);
  for (int i = 0; i < k; ++i) palette[i] = i + 1;
  ListAssignment lists(n);
  for (int v = 1; v <= n; ++v) lists.set(v, palette);
  return lists;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer over seed^salt.
  std::uint64_t z = seed ^ (salt * 0x9E3779B97F4A7C15ULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ListAssignment random_lists(int n, int size, int universe, std::uint64_t seed) {
  if (size > universe) {
    throw MalformedInputError("list size exceeds color universe");
  }
  ListAssignment lists(n);
  for (int v = 1; v <= n; ++v) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(v)));
    std::vector<int> pool(universe);
    for (int i = 0; i < universe; ++i) pool[i] = i + 1;
    // Partial Fisher-Yates; avoids std::uniform_int_distribution so the
    // draw is identical across standard libraries.
    std::vector<int> chosen;
    chosen.reserve(size);
    for (int i = 0; i < size; ++i) {
      std::uint64_t j = i + rng() % static_cast<std::uint64_t>(universe - i);
      std::swap(pool[i], pool[j]);
      chosen.push_back(pool[i]);
    }
    lists.set(v, std::move(chosen));
  }
  return lists;
}

ListAssignment read_lists(std::istream& in, int n) {
  ListAssignment lists(n);
  std::vector<bool> seen(n + 1, false);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw MalformedInputError("bad list line: " + line);
    int v = 0;
    try {
      v = std::stoi(line.substr(0, colon));
    } catch (const std::exception&) {
      throw MalformedInputError("bad vertex id in list line: " + line);
    }
    if (v < 1 || v > n) throw MalformedInputError("list vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw MalformedInputError("duplicate list for vertex " + std::to_string(v));
    seen[v] = true;
    std::istringstream cs(line.substr(colon + 1));
    std::vector<int> colors;
    int c = 0;
    while (cs >> c) colors.push_back(c);
    lists.set(v, std::move(colors));
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[v]) throw MalformedInputError("missing list for vertex " + std::to_string(v));
  }
  return lists;
}

ListAssignment read_lists_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open " + path);
  return read_lists(in, n);
}

void write_lists(std::ostream& out, const ListAssignment& lists) {
  for (int v = 1; v <= lists.vertex_count(); ++v) {
    out << v << ":";
    for (int c : lists.at(v)) out << " " << c;
    out << "\n";
  }
}

PartialColoring read_coloring(std::istream& in, int n) {
  PartialColoring col(n);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    int v = 0, c = 0;
    if (!(ls >> v >> c)) throw MalformedInputError("bad coloring line: " + line);
    if (v < 1 || v > n) {
      throw MalformedInputError("coloring vertex " + std::to_string(v) + " out of range");
    }
    col.set(v, c);
  }
  return col;
}

PartialColoring read_coloring_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open " + path);
  return read_coloring(in, n);
}

void write_coloring(std::ostream& out, const PartialColoring& col) {
  for (int v = 1; v <= col.vertex_count(); ++v) {
    if (col.is_colored(v)) out << v << " " << col.color(v) << "\n";
  }
}

void write_coloring_file(const std::string& path, const PartialColoring& col) {
  std::ofstream out(path);
  if (!out) throw MalformedInputError("cannot open " + path + " for writing");
  write_coloring(out, col);
}

}  // namespace madcolor
