#pragma once

#include <optional>
#include <variant>

#include "madcolor/coloring.hpp"
#include "madcolor/graph.hpp"

namespace madcolor {

// Outcome of degree_list_color. NotDegreeChoosable means the structural
// hypotheses failed (connected Gallai tree with all-tight lists); the
// instance may still be feasible, this solver just does not decide that.
struct NotDegreeChoosable {};

using DegreeListResult = std::variant<PartialColoring, NotDegreeChoosable>;

// List-colors a connected graph h whose lists satisfy |L(v)| >= deg(v),
// whenever some vertex has strict slack or h is not a Gallai tree.
//
// The slack case peels from a slack vertex; the tight case either works
// block by block from a block that is neither a clique nor an odd cycle,
// or (2-connected) splits on an edge with unequal lists or on a vertex
// with two non-adjacent equal-colorable neighbors.
DegreeListResult degree_list_color(const Graph& h, const ListAssignment& lists);

// Colors every uncolored vertex in order of strictly decreasing BFS
// distance from `center` (ties: larger id first, center last), each
// taking the smallest list color absent from its colored neighbors.
// Precolored vertices keep their colors and count as colored neighbors.
PartialColoring reverse_bfs_greedy(const Graph& h, const ListAssignment& lists, int center,
                                   PartialColoring precolored);

struct CliqueInfeasible {};

using CliqueListResult = std::variant<PartialColoring, CliqueInfeasible>;

// List-colors a complete graph via maximum bipartite matching between
// vertices and colors; infeasible exactly when no perfect matching on
// the vertex side exists.
CliqueListResult clique_list_color(const Graph& k, const ListAssignment& lists);

}  // namespace madcolor
