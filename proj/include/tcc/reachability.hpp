#pragma once

#include <vector>

#include "tcc/static_graph.hpp"
#include "tcc/temporal_graph.hpp"

namespace tcc {

// Vertices reachable from `source` by a temporal path under `s`, excluding
// the source itself. Single time-ordered sweep with earliest-arrival
// labels; under non-strict semantics relaxations within one timestep run
// to a fixpoint (a non-strict path may use many equal labels in a row).
Bits reachable_set(const TemporalGraph &tg, const Setting &s, int source);

// Arc (u,v) iff v is reachable from u; no self-loops.
DiGraph reachability_graph(const TemporalGraph &tg, const Setting &s);

struct SccPartition {
    // Blocks ordered by smallest contained vertex; vertices inside a block
    // ascend.
    std::vector<std::vector<int>> blocks;
    std::vector<int> component; // vertex -> block index
};

SccPartition scc_partition(const DiGraph &dg);

// All ordered pairs over distinct members of `s` are arcs. Vacuously true
// for |s| <= 1.
bool is_bidirectional_clique(const DiGraph &dg, const Bits &s);
bool is_bidirectional_clique(const DiGraph &dg, const std::vector<int> &s);

} // namespace tcc
