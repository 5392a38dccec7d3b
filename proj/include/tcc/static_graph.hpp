#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcc/bits.hpp"

namespace tcc {

// Undirected static graph on vertices 0..n-1, no self-loops.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bits(n)) {}

    int n() const { return n_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[u].test(v); }

    const Bits &neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    int edge_count() const;
    // Sorted (u, v) with u < v.
    std::vector<std::pair<int, int>> edges() const;

    // Keeps vertices listed in `verts` (ascending); new id i maps to verts[i].
    Graph induced(const std::vector<int> &verts) const;

    bool is_vertex_cover(const std::vector<int> &cover) const;

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    std::vector<Bits> adj_;
};

// Directed static graph on vertices 0..n-1, no self-loops, duplicate-free
// arc set. Used for reachability graphs and everything derived from them.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(int n) : n_(n), out_(n, Bits(n)) {}

    int n() const { return n_; }

    void add_arc(int u, int v);
    void remove_arc(int u, int v);
    bool has_arc(int u, int v) const { return out_[u].test(v); }

    const Bits &out(int u) const { return out_[u]; }

    int arc_count() const { return arc_count_; }
    // Sorted (u, v).
    std::vector<std::pair<int, int>> arcs() const;

    DiGraph induced(const std::vector<int> &verts) const;

    // Debug/CLI format: "dg <n>" header, then one "<u> <v>" line per arc,
    // sorted.
    std::string serialize() const;
    static DiGraph parse(const std::string &text);

    friend bool operator==(const DiGraph &a, const DiGraph &b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    int n_ = 0;
    int arc_count_ = 0;
    std::vector<Bits> out_;
};

// Edge {u,v} iff both (u,v) and (v,u) are arcs. Two-way connections are
// what matters for tccs, so most searches run on this graph.
Graph mutual_graph(const DiGraph &dg);

struct CliqueResult {
    int size = 0;
    std::vector<int> witness; // lexicographically least among the maximum cliques
};

// Exact maximum clique, branch and bound over ascending vertex ids.
CliqueResult max_clique(const Graph &g);

struct VertexCoverResult {
    int size = 0;
    std::vector<int> witness;
};

// Minimum vertex cover by iterative-deepening two-way branching on an
// uncovered edge; nullopt if the minimum exceeds `budget`.
std::optional<VertexCoverResult> min_vertex_cover(const Graph &g, int budget);

// Number of colors used by the greedy coloring in ascending vertex order.
// Upper-bounds the chromatic number.
int greedy_coloring_size(const Graph &g);

} // namespace tcc
