#include "tcc/kernel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tcc/error.hpp"
#include "tcc/transitivity.hpp"

namespace tcc {

std::vector<int> CliqueInstance::blue_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < graph.n(); ++v)
        if (coloring[v] == VertexColor::Blue) out.push_back(v);
    return out;
}

std::vector<int> CliqueInstance::white_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < graph.n(); ++v)
        if (coloring[v] == VertexColor::White) out.push_back(v);
    return out;
}

namespace {

// Connected components of g restricted to `members`, each sorted, ordered
// by smallest contained vertex.
std::vector<std::vector<int>> components_within(const Graph &g, const Bits &members) {
    std::vector<std::vector<int>> out;
    Bits todo = members;
    for (int start = todo.first(); start != -1; start = todo.first()) {
        Bits comp(g.n());
        comp.set(start);
        todo.reset(start);
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            Bits nbrs = g.neighbors(v) & todo;
            for (int w = nbrs.first(); w != -1; w = nbrs.next(w)) {
                comp.set(w);
                todo.reset(w);
                queue.push_back(w);
            }
        }
        out.push_back(comp.to_vector());
    }
    return out;
}

// Checks the structural claims that make B usable: adjacent white vertices
// are real twins, white clusters are cliques with no edges in between, and
// every blue vertex sees at most one cluster. Throws NotInherentModulator
// naming the violated claim.
void verify_modulator_structure(const Graph &ghat, const Bits &blue) {
    Bits white = Bits::all(ghat.n()) - blue;
    for (int u = white.first(); u != -1; u = white.next(u)) {
        Bits white_nbrs = ghat.neighbors(u) & white;
        for (int v = white_nbrs.next(u); v != -1; v = white_nbrs.next(v)) {
            Bits nu = ghat.neighbors(u);
            nu.set(u);
            Bits nv = ghat.neighbors(v);
            nv.set(v);
            if (!(nu == nv))
                throw Error("NotInherentModulator",
                            "adjacent white vertices " + std::to_string(u) + " and " +
                                std::to_string(v) + " are not real twins");
        }
    }
    auto clusters = components_within(ghat, white);
    std::vector<int> cluster_of(ghat.n(), -1);
    for (size_t i = 0; i < clusters.size(); ++i)
        for (int v : clusters[i]) cluster_of[v] = (int)i;
    for (const auto &cluster : clusters)
        for (size_t i = 0; i < cluster.size(); ++i)
            for (size_t j = i + 1; j < cluster.size(); ++j)
                if (!ghat.has_edge(cluster[i], cluster[j]))
                    throw Error("NotInherentModulator",
                                "white cluster is not a clique: vertices " +
                                    std::to_string(cluster[i]) + " and " +
                                    std::to_string(cluster[j]) + " are not adjacent");
    for (int b = blue.first(); b != -1; b = blue.next(b)) {
        int seen = -1;
        Bits nbrs = ghat.neighbors(b) & white;
        for (int w = nbrs.first(); w != -1; w = nbrs.next(w)) {
            if (seen == -1) seen = cluster_of[w];
            else if (seen != cluster_of[w])
                throw Error("NotInherentModulator",
                            "blue vertex " + std::to_string(b) +
                                " has neighbors in two white clusters");
        }
    }
}

CliqueInstance trivial_yes_instance() {
    CliqueInstance inst;
    inst.graph = Graph(3);
    inst.graph.add_edge(0, 1);
    inst.graph.add_edge(0, 2);
    inst.graph.add_edge(1, 2);
    inst.k = 3;
    inst.coloring.assign(3, VertexColor::White);
    inst.clusters = {{0, 1, 2}};
    inst.origin.assign(3, -1);
    return inst;
}

CliqueInstance trivial_no_instance() {
    CliqueInstance inst;
    inst.graph = Graph(2);
    inst.k = 2;
    inst.coloring.assign(2, VertexColor::White);
    inst.clusters = {{0}, {1}};
    inst.origin.assign(2, -1);
    return inst;
}

struct RuleState {
    const Graph &ghat;
    const Bits &blue;
    Bits alive;
    int k;
    KernelTrace &trace;

    int alive_degree(int v) const { return (ghat.neighbors(v) & alive).count(); }

    // Repeatedly removes the smallest-id vertex of degree < k-1.
    void rr1_fixpoint() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = alive.first(); v != -1; v = alive.next(v)) {
                if (alive_degree(v) < k - 1) {
                    alive.reset(v);
                    trace.entries.push_back({1, {v}, k});
                    changed = true;
                    break;
                }
            }
        }
    }

    // A white vertex with >= k-1 white neighbors sits in a white cluster
    // of size >= k, which is a clique.
    std::optional<int> rr2_witness() const {
        Bits white_alive = alive - blue;
        for (int v = white_alive.first(); v != -1; v = white_alive.next(v))
            if ((ghat.neighbors(v) & white_alive).count() >= k - 1) return v;
        return std::nullopt;
    }

    // Removes the largest-id white vertex of each cluster and lowers k.
    void rr3() {
        Bits white_alive = alive - blue;
        auto clusters = components_within(ghat, white_alive);
        std::vector<int> removed;
        for (const auto &cluster : clusters) removed.push_back(cluster.back());
        --k;
        for (int v : removed) alive.reset(v);
        trace.entries.push_back({3, removed, k});
    }
};

CliqueInstance make_reduced_instance(const Graph &ghat, const Bits &blue, const Bits &alive,
                                     int k) {
    CliqueInstance inst;
    std::vector<int> verts = alive.to_vector();
    inst.graph = ghat.induced(verts);
    inst.k = k;
    inst.origin = verts;
    inst.coloring.resize(verts.size());
    Bits white_new((int)verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        bool is_blue = blue.test(verts[i]);
        inst.coloring[i] = is_blue ? VertexColor::Blue : VertexColor::White;
        if (!is_blue) white_new.set((int)i);
    }
    inst.clusters = components_within(inst.graph, white_new);
    return inst;
}

} // namespace

KernelResult kernelize_reachability(const DiGraph &gr, int k,
                                    const std::vector<int> &modulator) {
    if (k < 1) throw Error("KTooSmall", "k must be at least 1");
    Bits blue(gr.n());
    for (int v : modulator) {
        if (v < 0 || v >= gr.n())
            throw Error("SourceOutOfRange", "modulator vertex " + std::to_string(v) + " out of range");
        blue.set(v);
    }
    const int b = blue.count();

    Graph ghat = mutual_graph(gr);
    verify_modulator_structure(ghat, blue);

    KernelResult result;
    result.modulator = blue.to_vector();
    RuleState state{ghat, blue, Bits::all(gr.n()), k, result.trace};

    state.rr1_fixpoint();
    if (auto witness = state.rr2_witness()) {
        result.trace.entries.push_back({2, {*witness}, 3});
        result.trace.status = KernelStatus::TrivialYes;
        result.instance = trivial_yes_instance();
        return result;
    }
    while (state.k > b + 1) {
        if (state.alive.none()) {
            result.trace.status = KernelStatus::TrivialNo;
            result.instance = trivial_no_instance();
            return result;
        }
        state.rr3();
        state.rr1_fixpoint();
    }
    result.trace.status = KernelStatus::Reduced;
    result.instance = make_reduced_instance(ghat, blue, state.alive, state.k);
    return result;
}

KernelResult kernelize(const TemporalGraph &tg, const Setting &s, int k,
                       const std::vector<int> &modulator) {
    return kernelize_reachability(reachability_graph(tg, s), k, modulator);
}

CliqueInstance build_addition_compression(const CliqueInstance &reduced) {
    const Graph &g = reduced.graph;
    auto comps = components_within(g, Bits::all(g.n()));

    // White vertices must be universal in their components; holds whenever
    // the modulator came from an addition-only set.
    for (const auto &comp : comps) {
        for (int v : comp) {
            if (reduced.coloring[v] != VertexColor::White) continue;
            for (int w : comp)
                if (w != v && !g.has_edge(v, w))
                    throw Error("NotInherentModulator",
                                "white vertex " + std::to_string(v) +
                                    " is not universal in its component");
        }
    }

    std::vector<int> blues = reduced.blue_vertices();
    std::vector<int> new_id(g.n(), -1);
    for (size_t i = 0; i < blues.size(); ++i) new_id[blues[i]] = (int)i;

    int wstar = 0;
    std::vector<int> alpha(comps.size(), 0);
    for (size_t i = 0; i < comps.size(); ++i) {
        for (int v : comps[i])
            if (reduced.coloring[v] == VertexColor::White) ++alpha[i];
        wstar = std::max(wstar, alpha[i]);
    }

    CliqueInstance out;
    int nb = (int)blues.size();
    out.graph = Graph(nb + wstar);
    out.k = reduced.k;
    for (int i = 0; i < nb; ++i) {
        out.coloring.push_back(VertexColor::Blue);
        out.origin.push_back(reduced.origin[blues[i]]);
    }
    for (int i = 0; i < wstar; ++i) {
        out.coloring.push_back(VertexColor::White);
        out.origin.push_back(-1);
    }
    for (size_t i = 0; i < blues.size(); ++i)
        for (size_t j = i + 1; j < blues.size(); ++j)
            if (g.has_edge(blues[i], blues[j])) out.graph.add_edge((int)i, (int)j);
    for (int i = 0; i < wstar; ++i)
        for (int j = i + 1; j < wstar; ++j) out.graph.add_edge(nb + i, nb + j);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c])
            if (reduced.coloring[v] == VertexColor::Blue)
                for (int i = 0; i < alpha[c]; ++i) out.graph.add_edge(new_id[v], nb + i);
    if (wstar > 0) {
        std::vector<int> cluster;
        for (int i = 0; i < wstar; ++i) cluster.push_back(nb + i);
        out.clusters = {cluster};
    }
    return out;
}

KernelResult kernelize_addition(const TemporalGraph &tg, const Setting &s, int k) {
    DiGraph gr = reachability_graph(tg, s);
    ArcModSet additions = arc_addition_set(gr);
    KernelResult result = kernelize_reachability(gr, k, additions.endpoints);
    if (result.trace.status == KernelStatus::Reduced)
        result.instance = build_addition_compression(result.instance);
    return result;
}

SemaphoreEncoding clique_to_open_tcc(const Graph &g, int k) {
    if (k < 5) throw Error("KTooSmall", "the encoding needs k >= 5, got " + std::to_string(k));
    auto edges = g.edges();
    const int n = g.n();
    TemporalGraph tg(n + 2 * (int)edges.size(), true, 5);
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int e_uv = n + 2 * (int)i;
        int e_vu = e_uv + 1;
        tg.add_edge(u, e_uv, 4);
        tg.add_edge(v, e_vu, 4);
        tg.add_edge(e_uv, v, 5);
        tg.add_edge(e_vu, u, 5);
    }
    return SemaphoreEncoding{std::move(tg), k};
}

std::string serialize_dimacs(const CliqueInstance &inst) {
    std::ostringstream os;
    os << "c k " << inst.k << "\n";
    os << "c blue";
    for (int v : inst.blue_vertices()) os << " " << v + 1;
    os << "\n";
    for (const auto &cluster : inst.clusters) {
        os << "c cluster";
        for (int v : cluster) os << " " << v + 1;
        os << "\n";
    }
    auto edges = inst.graph.edges();
    os << "p edge " << inst.graph.n() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) os << "e " << u + 1 << " " << v + 1 << "\n";
    return os.str();
}

DimacsGraph parse_dimacs(const std::string &text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    DimacsGraph out;
    bool have_p = false;
    int n = 0, m = 0, seen = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(is, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") {
            std::string key;
            if (ls >> key && key == "k") {
                int k;
                if (ls >> k) out.k = k;
            }
            continue;
        }
        if (tag == "p") {
            std::string fmt;
            if (have_p || !(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                throw Error("ParseError", "line " + std::to_string(line_no) + ": malformed p line");
            have_p = true;
            continue;
        }
        if (tag == "e") {
            int u, v;
            if (!have_p || !(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n || u == v)
                throw Error("ParseError", "line " + std::to_string(line_no) + ": malformed e line");
            edges.emplace_back(u - 1, v - 1);
            ++seen;
            continue;
        }
        throw Error("ParseError", "line " + std::to_string(line_no) + ": unknown line type '" + tag + "'");
    }
    if (!have_p) throw Error("ParseError", "missing p line");
    if (seen != m) throw Error("ParseError", "edge count mismatch: p line says " + std::to_string(m) +
                                                 ", found " + std::to_string(seen));
    out.graph = Graph(n);
    for (auto [u, v] : edges) out.graph.add_edge(u, v);
    return out;
}

} // namespace tcc
