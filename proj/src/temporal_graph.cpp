#include "tcc/temporal_graph.hpp"

#include <algorithm>
#include <sstream>

#include "tcc/error.hpp"

namespace tcc {

Setting setting_for(const TemporalGraph &tg, Strictness s) {
    return Setting{s, tg.directed() ? Orientation::Directed : Orientation::Undirected};
}

TemporalGraph::TemporalGraph(int n, bool directed, int lifetime)
    : n_(n), directed_(directed), lifetime_(lifetime) {
    if (n < 0) throw Error("ParseError", "vertex count must be nonnegative");
    if (lifetime < 1) throw Error("ParseError", "lifetime must be positive");
}

void TemporalGraph::add_edge(int u, int v, int t) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw Error("ParseError", "edge endpoint out of range");
    if (u == v) throw Error("ParseError", "self-loop");
    if (t < 1 || t > lifetime_) throw Error("ParseError", "timestep out of range");
    if (!directed_ && u > v) std::swap(u, v);
    TimeEdge e{u, v, t};
    auto less = [](const TimeEdge &a, const TimeEdge &b) {
        return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
    };
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e, less);
    if (it != edges_.end() && *it == e)
        throw Error("ParseError", "duplicate time-edge");
    edges_.insert(it, e);
}

bool TemporalGraph::has_edge(int u, int v, int t) const {
    if (!directed_ && u > v) std::swap(u, v);
    TimeEdge e{u, v, t};
    auto less = [](const TimeEdge &a, const TimeEdge &b) {
        return std::tie(a.t, a.u, a.v) < std::tie(b.t, b.u, b.v);
    };
    return std::binary_search(edges_.begin(), edges_.end(), e, less);
}

TemporalGraph TemporalGraph::induced(const std::vector<int> &verts) const {
    std::vector<int> new_id(n_, -1);
    for (size_t i = 0; i < verts.size(); ++i) new_id[verts[i]] = (int)i;
    TemporalGraph out((int)verts.size(), directed_, lifetime_);
    for (const TimeEdge &e : edges_)
        if (new_id[e.u] != -1 && new_id[e.v] != -1)
            out.add_edge(new_id[e.u], new_id[e.v], e.t);
    return out;
}

std::string TemporalGraph::serialize() const {
    std::ostringstream os;
    os << "tg " << (directed_ ? "directed" : "undirected") << " " << n_ << " "
       << lifetime_ << "\n";
    for (const TimeEdge &e : edges_) os << e.u << " " << e.v << " " << e.t << "\n";
    return os.str();
}

namespace {

Error parse_error(int line, const std::string &what) {
    return Error("ParseError", "line " + std::to_string(line) + ": " + what);
}

} // namespace

TemporalGraph parse_temporal_graph(const std::string &text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0, lifetime = 0;
    bool directed = false;
    std::vector<std::pair<int, TimeEdge>> pending; // (line, edge)

    while (std::getline(is, line)) {
        ++line_no;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag, orient;
            if (!(ls >> tag >> orient >> n >> lifetime) || tag != "tg" ||
                (orient != "directed" && orient != "undirected"))
                throw parse_error(line_no, "malformed header, expected 'tg <directed|undirected> <n> <L>'");
            std::string extra;
            if (ls >> extra) throw parse_error(line_no, "trailing tokens in header");
            if (n < 0) throw parse_error(line_no, "vertex count must be nonnegative");
            if (lifetime < 1) throw parse_error(line_no, "lifetime must be positive");
            directed = (orient == "directed");
            have_header = true;
            continue;
        }
        int u, v, t;
        if (!(ls >> u >> v >> t)) throw parse_error(line_no, "malformed time-edge, expected '<u> <v> <t>'");
        std::string extra;
        if (ls >> extra) throw parse_error(line_no, "trailing tokens after time-edge");
        pending.push_back({line_no, TimeEdge{u, v, t}});
    }
    if (!have_header) throw parse_error(line_no, "missing header");

    TemporalGraph tg(n, directed, lifetime);
    for (auto &[edge_line, e] : pending) {
        if (e.u < 0 || e.u >= n)
            throw parse_error(edge_line, "vertex " + std::to_string(e.u) + " out of range [0," + std::to_string(n - 1) + "]");
        if (e.v < 0 || e.v >= n)
            throw parse_error(edge_line, "vertex " + std::to_string(e.v) + " out of range [0," + std::to_string(n - 1) + "]");
        if (e.u == e.v) throw parse_error(edge_line, "self-loop at vertex " + std::to_string(e.u));
        if (e.t < 1 || e.t > lifetime)
            throw parse_error(edge_line, "timestep " + std::to_string(e.t) + " out of range [1," + std::to_string(lifetime) + "]");
        if (tg.has_edge(e.u, e.v, e.t)) throw parse_error(edge_line, "duplicate time-edge");
        tg.add_edge(e.u, e.v, e.t);
    }
    return tg;
}

bool is_proper(const TemporalGraph &tg) {
    // Edges are sorted by timestep; check each snapshot's degrees.
    std::vector<int> deg_in(tg.n(), 0), deg_out(tg.n(), 0);
    const auto &edges = tg.edges();
    size_t i = 0;
    while (i < edges.size()) {
        size_t j = i;
        std::vector<int> touched;
        bool ok = true;
        while (j < edges.size() && edges[j].t == edges[i].t) {
            const TimeEdge &e = edges[j];
            deg_out[e.u]++;
            deg_in[e.v]++;
            if (!tg.directed()) {
                deg_out[e.v]++;
                deg_in[e.u]++;
            }
            touched.push_back(e.u);
            touched.push_back(e.v);
            ++j;
        }
        for (int v : touched) {
            if (tg.directed()) {
                if (deg_in[v] > 0 && deg_out[v] > 0) ok = false;
            } else {
                if (deg_out[v] > 1) ok = false;
            }
        }
        for (int v : touched) deg_in[v] = deg_out[v] = 0;
        if (!ok) return false;
        i = j;
    }
    return true;
}

bool is_simple(const TemporalGraph &tg) {
    // Pair (u,v) may appear at only one timestep.
    std::set<std::pair<int, int>> seen;
    for (const TimeEdge &e : tg.edges())
        if (!seen.insert({e.u, e.v}).second) return false;
    return true;
}

Graph underlying_graph(const TemporalGraph &tg) {
    if (tg.directed())
        throw Error("SettingMismatch", "underlying_graph expects an undirected temporal graph");
    Graph g(tg.n());
    for (const TimeEdge &e : tg.edges()) g.add_edge(e.u, e.v);
    return g;
}

DiGraph underlying_digraph(const TemporalGraph &tg) {
    if (!tg.directed())
        throw Error("SettingMismatch", "underlying_digraph expects a directed temporal graph");
    DiGraph g(tg.n());
    for (const TimeEdge &e : tg.edges()) g.add_arc(e.u, e.v);
    return g;
}

Graph underlying_skeleton(const TemporalGraph &tg) {
    Graph g(tg.n());
    for (const TimeEdge &e : tg.edges()) g.add_edge(e.u, e.v);
    return g;
}

} // namespace tcc
