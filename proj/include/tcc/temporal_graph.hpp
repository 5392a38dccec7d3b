#pragma once

#include <set>
#include <string>
#include <vector>

#include "tcc/static_graph.hpp"

namespace tcc {

// One edge (or arc) existing at one timestep.
struct TimeEdge {
    int u;
    int v;
    int t;

    friend bool operator==(const TimeEdge &, const TimeEdge &) = default;
};

enum class Strictness { Strict, NonStrict };
enum class Orientation { Directed, Undirected };

// Problem version: strict vs. non-strict temporal paths, directed vs.
// undirected edges. Orientation must match the graph it is used with.
struct Setting {
    Strictness strictness = Strictness::Strict;
    Orientation orientation = Orientation::Undirected;

    bool strict() const { return strictness == Strictness::Strict; }
};

Setting setting_for(const struct TemporalGraph &tg, Strictness s);

// A temporal graph: vertices 0..n-1, lifetime L, and a set of time-edges
// (u, v, t) with 1 <= t <= L. Undirected edges are stored with u < v.
// Snapshots with no edges are implicit. Immutable once built; all
// operations on it are pure.
class TemporalGraph {
public:
    TemporalGraph() : n_(0), directed_(false), lifetime_(1) {}
    TemporalGraph(int n, bool directed, int lifetime);

    int n() const { return n_; }
    bool directed() const { return directed_; }
    int lifetime() const { return lifetime_; }

    // Rejects self-loops, out-of-range endpoints/timesteps and duplicate
    // triples. Undirected edges are canonicalized to u < v.
    void add_edge(int u, int v, int t);

    bool has_edge(int u, int v, int t) const;
    int edge_count() const { return (int)edges_.size(); }

    // Sorted by (t, u, v), so iteration walks timesteps in order.
    const std::vector<TimeEdge> &edges() const { return edges_; }

    // Time-edges with both endpoints in `verts`, original timesteps and
    // lifetime kept. Vertices are renumbered to 0..|verts|-1 following the
    // ascending order of `verts`.
    TemporalGraph induced(const std::vector<int> &verts) const;

    std::string serialize() const;

    friend bool operator==(const TemporalGraph &a, const TemporalGraph &b) {
        return a.n_ == b.n_ && a.directed_ == b.directed_ &&
               a.lifetime_ == b.lifetime_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    bool directed_;
    int lifetime_;
    std::vector<TimeEdge> edges_; // sorted by (t, u, v), duplicate-free
};

// .tg text format:
//   tg <directed|undirected> <n> <L>
//   <u> <v> <t>
// '#' starts a comment line. Errors carry the offending line number.
TemporalGraph parse_temporal_graph(const std::string &text);

// Per snapshot, every vertex has degree <= 1 (undirected) or in-degree 0
// or out-degree 0 (directed). On proper graphs strict and non-strict
// reachability coincide.
bool is_proper(const TemporalGraph &tg);

// Every edge (arc) appears in exactly one snapshot.
bool is_simple(const TemporalGraph &tg);

// Union of the snapshots, duplicates collapsed. Orientation-specific.
Graph underlying_graph(const TemporalGraph &tg);    // undirected inputs only
DiGraph underlying_digraph(const TemporalGraph &tg); // directed inputs only

// Underlying graph with orientation ignored; used for vertex cover numbers.
Graph underlying_skeleton(const TemporalGraph &tg);

} // namespace tcc
