#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "tcc/static_graph.hpp"

namespace tcc {

// (u, v, w): (u,v) and (v,w) are arcs, u != w, but (u,w) is not. A digraph
// is transitive exactly when no such triple exists. Two-cycles are fine:
// u == w is excluded.
using Violation = std::tuple<int, int, int>;

// Lexicographically smallest violation, or nullopt if transitive.
std::optional<Violation> find_violation(const DiGraph &dg);

// Same, restricted to the vertices in `alive`.
std::optional<Violation> find_violation(const DiGraph &dg, const Bits &alive);

bool is_transitive(const DiGraph &dg);

// Vertex set whose removal leaves the graph transitive.
struct Modulator {
    std::vector<int> vertices;

    int size() const { return (int)vertices.size(); }
};

// Minimum-size transitivity modulator. Iterative deepening on the budget;
// at each violation (u,v,w) branches on deleting u, then v, then w, so the
// result is deterministic. Runs in 3^|result| * poly(n).
Modulator min_transitivity_modulator(const DiGraph &dg);

// Arc changes turning the graph transitive when applied as a symmetric
// difference. `endpoints` collects every vertex touched by the set; those
// endpoints always form an inherent transitivity modulator.
struct ArcModSet {
    std::vector<std::pair<int, int>> additions;
    std::vector<std::pair<int, int>> deletions;
    std::vector<int> endpoints;

    int size() const { return (int)(additions.size() + deletions.size()); }
};

DiGraph apply(const DiGraph &dg, const ArcModSet &m);

// Transitive closure of `dg`.
DiGraph transitive_closure(const DiGraph &dg);

// The unique minimum addition-only modification set: the closure arcs
// missing from the graph. Its size is the arc-addition distance.
ArcModSet arc_addition_set(const DiGraph &dg);

// Minimum arc-modification set of size <= budget, or nullopt if none
// exists within the budget. At each violation (u,v,w) branches on deleting
// (u,v), deleting (v,w), adding (u,w); a branched arc's state is frozen
// for the subtree so branches cannot undo each other. Iterative deepening
// makes the answer minimum and deterministic. With `allow_additions`
// false only deletions are branched on (no optimality guarantee claimed
// beyond the budget search itself).
std::optional<ArcModSet> min_arc_modification_set(const DiGraph &dg, int budget,
                                                  bool allow_additions = true);

} // namespace tcc
