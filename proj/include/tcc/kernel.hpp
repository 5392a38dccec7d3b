#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcc/reachability.hpp"
#include "tcc/temporal_graph.hpp"

namespace tcc {

enum class VertexColor { Blue, White };

// A Clique instance produced by kernelization. Vertices are 0..n-1 in the
// instance's own numbering; `origin` maps back to the source temporal
// graph (-1 for synthetic vertices of the trivial instances and of the
// W* clique). Blue vertices are the surviving modulator vertices,
// `clusters` partitions the white vertices into the connected components
// of the white subgraph.
struct CliqueInstance {
    Graph graph;
    int k = 0;
    std::vector<VertexColor> coloring;
    std::vector<std::vector<int>> clusters;
    std::vector<int> origin;

    std::vector<int> blue_vertices() const;
    std::vector<int> white_vertices() const;
};

enum class KernelStatus { Reduced, TrivialYes, TrivialNo };

// One rule application. `vertices` are ids of the initial mutual graph
// (equal to the source reachability-graph ids): the removed vertex for
// RR1, the witness vertex for RR2, the per-cluster removals for RR3.
struct KernelTraceEntry {
    int rule = 0;
    std::vector<int> vertices;
    int k_after = 0;
};

struct KernelTrace {
    std::vector<KernelTraceEntry> entries;
    KernelStatus status = KernelStatus::Reduced;
};

struct KernelResult {
    CliqueInstance instance;
    KernelTrace trace;
    std::vector<int> modulator; // the B the kernel ran with
};

// Compress Open-TCC to Clique given an inherent transitivity modulator B
// of the reachability graph. B is verified structurally: white clusters
// must be cliques of real twins, and no blue vertex may have neighbors in
// two clusters; otherwise NotInherentModulator is thrown with the violated
// claim. Rule order: RR1 to fixpoint, one RR2 check, then alternating RR3
// and RR1 fixpoints while k' > |B|+1.
//
// Trivial outcomes are materialized as constant-size instances: a K3 with
// k' = 3 (yes) and an edgeless 2-vertex graph with k' = 2 (no). For a
// reduced output, #blue <= |B|, #clusters <= |B|, every cluster has at
// most |B|+1 vertices and |V| <= |B|^2 + 2|B|.
KernelResult kernelize(const TemporalGraph &tg, const Setting &s, int k,
                       const std::vector<int> &modulator);

// Same, starting from an already computed reachability graph.
KernelResult kernelize_reachability(const DiGraph &gr, int k,
                                    const std::vector<int> &modulator);

// Addition-only kernel: runs kernelize with B = endpoints of the minimum
// arc-addition set, then replaces the white clusters by a single shared
// clique W* of the largest cluster size, wired to each component's blue
// vertices. Reduced outputs have at most 2|B|+1 vertices.
KernelResult kernelize_addition(const TemporalGraph &tg, const Setting &s, int k);

// The W*-compression step on a reduced kernel instance whose white
// vertices are universal in their components. Exposed so traces can be
// replayed.
CliqueInstance build_addition_compression(const CliqueInstance &reduced);

struct SemaphoreEncoding {
    TemporalGraph tg;
    int k = 0;
};

// Encode Clique as Open-TCC: a proper simple directed temporal graph with
// lifetime 5 whose timesteps 1-3 are empty. Per edge {u,v} two relay
// vertices e_uv, e_vu carry arcs u -> e_uv -> v and v -> e_vu -> u at
// timesteps 4 and 5, so two vertices reach each other exactly when they
// are adjacent. Relays are numbered n + 2i, n + 2i + 1 following the
// sorted edge order. Requires k >= 5.
SemaphoreEncoding clique_to_open_tcc(const Graph &g, int k);

// DIMACS text: "c k", "c blue", "c cluster" sidecar lines (1-indexed ids),
// then "p edge <n> <m>" and "e <u> <v>" lines.
std::string serialize_dimacs(const CliqueInstance &inst);

struct DimacsGraph {
    Graph graph;
    std::optional<int> k;
};

DimacsGraph parse_dimacs(const std::string &text);

} // namespace tcc
