#include "tcc/static_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tcc/error.hpp"

namespace tcc {

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("Graph::add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
    adj_[u].set(v);
    adj_[v].set(u);
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += adj_[v].count();
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int> &verts) const {
    Graph g((int)verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (has_edge(verts[i], verts[j])) g.add_edge((int)i, (int)j);
    return g;
}

bool Graph::is_vertex_cover(const std::vector<int> &cover) const {
    Bits in_cover(n_);
    for (int v : cover) in_cover.set(v);
    for (int u = 0; u < n_; ++u) {
        if (in_cover.test(u)) continue;
        if ((adj_[u] - in_cover).any()) return false;
    }
    return true;
}

void DiGraph::add_arc(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("DiGraph::add_arc: vertex out of range");
    if (u == v) throw std::invalid_argument("DiGraph::add_arc: self-loop");
    if (!out_[u].test(v)) {
        out_[u].set(v);
        ++arc_count_;
    }
}

void DiGraph::remove_arc(int u, int v) {
    if (out_[u].test(v)) {
        out_[u].reset(v);
        --arc_count_;
    }
}

std::vector<std::pair<int, int>> DiGraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = out_[u].first(); v != -1; v = out_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

DiGraph DiGraph::induced(const std::vector<int> &verts) const {
    DiGraph g((int)verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j)
            if (i != j && has_arc(verts[i], verts[j])) g.add_arc((int)i, (int)j);
    return g;
}

std::string DiGraph::serialize() const {
    std::ostringstream os;
    os << "dg " << n_ << "\n";
    for (auto [u, v] : arcs()) os << u << " " << v << "\n";
    return os.str();
}

DiGraph DiGraph::parse(const std::string &text) {
    std::istringstream is(text);
    std::string tag;
    int n;
    if (!(is >> tag >> n) || tag != "dg" || n < 0)
        throw Error("ParseError", "digraph: malformed header");
    DiGraph g(n);
    int u, v;
    while (is >> u >> v) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("ParseError", "digraph: arc endpoint out of range");
        if (u == v) throw Error("ParseError", "digraph: self-loop");
        g.add_arc(u, v);
    }
    return g;
}

Graph mutual_graph(const DiGraph &dg) {
    Graph g(dg.n());
    for (int u = 0; u < dg.n(); ++u)
        for (int v = dg.out(u).next(u); v != -1; v = dg.out(u).next(v))
            if (dg.has_arc(v, u)) g.add_edge(u, v);
    return g;
}

namespace {

void max_clique_rec(const Graph &g, Bits &current, int current_size,
                    const Bits &candidates, CliqueResult &best) {
    if (current_size > best.size) {
        best.size = current_size;
        best.witness = current.to_vector();
    }
    if (current_size + candidates.count() <= best.size) return;
    Bits rest = candidates;
    for (int v = rest.first(); v != -1; v = rest.next(v)) {
        if (current_size + rest.count() <= best.size) return;
        current.set(v);
        rest.reset(v);
        Bits next = rest & g.neighbors(v);
        max_clique_rec(g, current, current_size + 1, next, best);
        current.reset(v);
    }
}

} // namespace

CliqueResult max_clique(const Graph &g) {
    CliqueResult best;
    Bits current(g.n());
    max_clique_rec(g, current, 0, Bits::all(g.n()), best);
    return best;
}

namespace {

// Returns a cover of size <= budget extending `chosen`, if one exists.
bool vertex_cover_rec(const Graph &g, Bits &chosen, int chosen_size, int budget,
                      std::vector<int> &out) {
    int eu = -1, ev = -1;
    for (int u = 0; u < g.n() && eu == -1; ++u) {
        if (chosen.test(u)) continue;
        Bits uncovered = g.neighbors(u) - chosen;
        int v = uncovered.next(u);
        if (v != -1) {
            eu = u;
            ev = v;
        }
    }
    if (eu == -1) {
        out = chosen.to_vector();
        return true;
    }
    if (chosen_size == budget) return false;
    for (int pick : {eu, ev}) {
        chosen.set(pick);
        if (vertex_cover_rec(g, chosen, chosen_size + 1, budget, out)) return true;
        chosen.reset(pick);
    }
    return false;
}

} // namespace

std::optional<VertexCoverResult> min_vertex_cover(const Graph &g, int budget) {
    for (int b = 0; b <= budget; ++b) {
        Bits chosen(g.n());
        std::vector<int> witness;
        if (vertex_cover_rec(g, chosen, 0, b, witness))
            return VertexCoverResult{(int)witness.size(), witness};
    }
    return std::nullopt;
}

int greedy_coloring_size(const Graph &g) {
    std::vector<int> color(g.n(), -1);
    int used = 0;
    for (int v = 0; v < g.n(); ++v) {
        std::vector<char> taken(used + 1, 0);
        for (int u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
            if (color[u] >= 0) taken[color[u]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

} // namespace tcc
