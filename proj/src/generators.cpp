#include "tcc/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tcc/error.hpp"

namespace tcc {

TemporalGraph gen_single_snapshot(const Graph &g) {
    TemporalGraph tg(g.n(), false, 1);
    for (auto [u, v] : g.edges()) tg.add_edge(u, v, 1);
    return tg;
}

TemporalGraph gen_star(int m) {
    if (m < 1) throw Error("KTooSmall", "star size must be at least 1");
    const int center = 2 * m;
    TemporalGraph tg(2 * m + 1, false, 3);
    for (int x = 0; x < m; ++x) {
        tg.add_edge(x, center, 1);
        tg.add_edge(x, center, 3);
    }
    for (int y = m; y < 2 * m; ++y) tg.add_edge(y, center, 2);
    return tg;
}

NokernelInstance gen_nokernel_directed(const Graph &g, const std::vector<int> &cover, int k) {
    if (k <= 6) throw Error("KTooSmall", "the construction needs k > 6, got " + std::to_string(k));
    std::vector<int> s = cover;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= g.n())
            throw Error("SourceOutOfRange", "cover vertex " + std::to_string(v) + " out of range");
    if (!g.is_vertex_cover(s))
        throw Error("NotAVertexCover", "the given set leaves an edge of the graph uncovered");

    Bits in_cover(g.n());
    for (int v : s) in_cover.set(v);

    NokernelInstance out;
    out.cover = s;
    for (auto [u, v] : g.edges())
        if (in_cover.test(u) && in_cover.test(v)) out.cover_edges.emplace_back(u, v);
    out.relay_base = g.n();
    out.in_base = g.n() + 2 * (int)out.cover_edges.size();

    const int total = out.in_base + (int)s.size();
    TemporalGraph tg(total, true, 5);

    std::vector<int> cover_index(g.n(), -1);
    for (size_t i = 0; i < s.size(); ++i) cover_index[s[i]] = (int)i;

    // Outside neighbors enter through in_v, leave through v, before the
    // semaphore phase starts.
    for (int v : s) {
        int iv = out.in_vertex(cover_index[v]);
        tg.add_edge(iv, v, 3);
        Bits outside_nbrs = g.neighbors(v) - in_cover;
        for (int w = outside_nbrs.first(); w != -1; w = outside_nbrs.next(w)) {
            tg.add_edge(v, w, 2);
            tg.add_edge(w, iv, 1);
        }
    }
    for (size_t i = 0; i < out.cover_edges.size(); ++i) {
        auto [u, v] = out.cover_edges[i];
        tg.add_edge(u, out.e_uv((int)i), 4);
        tg.add_edge(v, out.e_vu((int)i), 4);
        tg.add_edge(out.e_uv((int)i), v, 5);
        tg.add_edge(out.e_vu((int)i), u, 5);
    }

    if (!is_proper(tg))
        throw std::logic_error("gen_nokernel_directed: output is not proper");

    std::vector<int> s_vec(s.begin(), s.end());
    out.cover_partite_checked = greedy_coloring_size(g.induced(s_vec)) <= k - 1;
    out.tg = std::move(tg);
    return out;
}

ClosedHardInstance gen_closed_hard(const TemporalGraph &tg, int k) {
    if (k <= 4) throw Error("KTooSmall", "the reduction needs k > 4, got " + std::to_string(k));
    const int n = tg.n();
    const int lifetime = tg.lifetime();
    ClosedHardInstance out;
    out.n_original = n;
    out.x1 = 2 * n;
    out.x2 = 2 * n + 1;
    out.x3 = 2 * n + 2;
    out.directed_edge_pairs = tg.directed();

    TemporalGraph ext(2 * n + 3, tg.directed(), lifetime + 2 * n + 4);
    for (const TimeEdge &e : tg.edges()) ext.add_edge(e.u, e.v, e.t);

    auto add_gadget_edge = [&](int a, int b, int t) {
        ext.add_edge(a, b, t);
        if (tg.directed()) ext.add_edge(b, a, t);
    };
    // Formulas below use the 1-based value of a vertex; id v carries
    // value v+1.
    for (int v = 0; v < n; ++v) {
        const int value = v + 1;
        const int vp = out.primed(v);
        add_gadget_edge(v, vp, lifetime + 1);
        add_gadget_edge(v, vp, lifetime + 2 * n + 4);
        add_gadget_edge(vp, out.x1, lifetime + 1 + value);
        add_gadget_edge(vp, out.x3, lifetime + n + 3 + value);
    }
    add_gadget_edge(out.x1, out.x2, lifetime + n + 2);
    add_gadget_edge(out.x2, out.x3, lifetime + n + 3);

    out.tg = std::move(ext);
    return out;
}

TemporalGraph gen_random(int n, int lifetime, double p, bool directed, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw Error("ParseError", "probability must be in [0,1]");
    TemporalGraph tg(n, directed, lifetime);
    std::mt19937_64 rng(seed);
    auto draw = [&]() { return (rng() >> 11) * (1.0 / 9007199254740992.0); };
    for (int t = 1; t <= lifetime; ++t)
        for (int u = 0; u < n; ++u)
            for (int v = directed ? 0 : u + 1; v < n; ++v) {
                if (v == u) continue;
                if (draw() < p) tg.add_edge(u, v, t);
            }
    return tg;
}

} // namespace tcc
