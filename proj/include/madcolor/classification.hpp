#pragma once

#include <cmath>

#include "madcolor/graph.hpp"

namespace madcolor {

// Default radius coefficient for the happiness classification. The value
// is what the peeling progress guarantees are proved for; smaller values
// can be supplied for experiments, at the cost of downgrading those
// guarantees to warnings.
inline const double kDefaultRadiusCoefficient = 12.0 / std::log2(6.0 / 5.0);

// Radius used by the classification: ceil(c * log2(n)).
int happy_radius(int n, double c);

// Vertex classification for one peeling iteration.
//   rich:  degree at most d
//   poor:  the rest
//   happy: rich vertices whose radius-r ball inside the rich-induced
//          subgraph contains a vertex of degree at most d-1, or is not a
//          Gallai tree
//   sad:   rich but not happy
// rich = happy + sad and rich + poor = all vertices.
struct Classification {
  int d = 0;
  double c = 0.0;
  int radius = 0;
  VertexSet rich;
  VertexSet poor;
  VertexSet happy;
  VertexSet sad;
};

}  // namespace madcolor
