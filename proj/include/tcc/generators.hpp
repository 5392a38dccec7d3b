#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tcc/static_graph.hpp"
#include "tcc/temporal_graph.hpp"

namespace tcc {

// Lifetime-1 lift of a static graph: strict tccs are exactly its cliques.
TemporalGraph gen_single_snapshot(const Graph &g);

// Star with center c = 2m and leaves X = 0..m-1, Y = m..2m-1. X-edges
// exist at timesteps 1 and 3, Y-edges at timestep 2, lifetime 3. Under
// strict semantics no Y-vertex reaches another Y-vertex, which drives the
// vertex-deletion distance up while the vertex cover number stays 1.
TemporalGraph gen_star(int m);

// Directed lifetime-5 instance built from a graph G with vertex cover S:
// semaphore relays e_uv, e_vu for each edge inside S (timesteps 4/5), an
// entry vertex in_v per cover vertex, arcs (w, in_v) at timestep 1 and
// (v, w) at timestep 2 for neighbors w outside S, and (in_v, v) at
// timestep 3. When G[S] is (k-1)-partite the instance has a tcc of size k
// exactly when G has a k-clique.
struct NokernelInstance {
    TemporalGraph tg;
    std::vector<int> cover;                      // sorted S
    std::vector<std::pair<int, int>> cover_edges; // edges of G[S], sorted
    int relay_base = 0;                          // first relay id (= |V(G)|)
    int in_base = 0;                             // first in-vertex id
    // Greedy coloring of G[S] used at most k-1 colors; implies the
    // (k-1)-partiteness the equivalence needs (the converse may fail).
    bool cover_partite_checked = false;

    int e_uv(int edge_index) const { return relay_base + 2 * edge_index; }
    int e_vu(int edge_index) const { return relay_base + 2 * edge_index + 1; }
    int in_vertex(int cover_index) const { return in_base + cover_index; }
};

// Throws NotAVertexCover if S leaves an edge uncovered and KTooSmall for
// k <= 6. Output is always proper; violation of that would be a logic
// error and is checked at generation time.
NokernelInstance gen_nokernel_directed(const Graph &g, const std::vector<int> &cover, int k);

// Self-reduction gadget for Closed-TCC: adds a primed copy v' per vertex,
// three relay vertices x1, x2, x3 and 2n+4 trailing snapshots. Writing v
// for the 1-based value of a vertex (id v-1), the added edges are
//   {v, v'}  at L+1 and L+2n+4        {x1, x2} at L+n+2
//   {v', x1} at L+1+v                 {x2, x3} at L+n+3
//   {v', x3} at L+n+3+v
// The closed-tcc answer at k is preserved, and the reachability graph of
// the output misses exactly the arc (x3, x1).
struct ClosedHardInstance {
    TemporalGraph tg;
    int n_original = 0;
    int x1 = 0, x2 = 0, x3 = 0; // = 2n, 2n+1, 2n+2
    // For directed inputs each gadget edge is added as two opposite arcs
    // at the same timestep.
    bool directed_edge_pairs = false;

    int primed(int v) const { return n_original + v; }
};

// Throws KTooSmall for k <= 4.
ClosedHardInstance gen_closed_hard(const TemporalGraph &tg, int k);

// Every potential time-edge appears independently with probability p.
// Deterministic in the seed: timesteps ascend, then endpoints ascend, one
// uniform draw per slot.
TemporalGraph gen_random(int n, int lifetime, double p, bool directed, uint64_t seed);

} // namespace tcc
