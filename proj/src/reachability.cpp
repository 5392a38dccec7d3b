#include "tcc/reachability.hpp"

#include <algorithm>
#include <limits>

#include "tcc/error.hpp"

namespace tcc {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

void check_setting(const TemporalGraph &tg, const Setting &s) {
    bool want_directed = s.orientation == Orientation::Directed;
    if (want_directed != tg.directed())
        throw Error("SettingMismatch", "setting orientation does not match the graph");
}

} // namespace

Bits reachable_set(const TemporalGraph &tg, const Setting &s, int source) {
    check_setting(tg, s);
    if (source < 0 || source >= tg.n())
        throw Error("SourceOutOfRange", "source vertex " + std::to_string(source) +
                                            " out of range [0," + std::to_string(tg.n() - 1) + "]");
    std::vector<int> arrival(tg.n(), kUnreached);
    arrival[source] = 0;
    const auto &edges = tg.edges();
    const bool strict = s.strict();
    size_t i = 0;
    while (i < edges.size()) {
        size_t j = i;
        while (j < edges.size() && edges[j].t == edges[i].t) ++j;
        const int t = edges[i].t;
        if (strict) {
            // arrival[u] < t never holds for vertices first reached at t,
            // so one pass over the block suffices.
            for (size_t e = i; e < j; ++e) {
                int u = edges[e].u, v = edges[e].v;
                if (arrival[u] < t && arrival[v] > t) arrival[v] = t;
                if (!tg.directed() && arrival[v] < t && arrival[u] > t) arrival[u] = t;
            }
        } else {
            bool changed = true;
            while (changed) {
                changed = false;
                for (size_t e = i; e < j; ++e) {
                    int u = edges[e].u, v = edges[e].v;
                    if (arrival[u] <= t && arrival[v] > t) {
                        arrival[v] = t;
                        changed = true;
                    }
                    if (!tg.directed() && arrival[v] <= t && arrival[u] > t) {
                        arrival[u] = t;
                        changed = true;
                    }
                }
            }
        }
        i = j;
    }
    Bits reached(tg.n());
    for (int v = 0; v < tg.n(); ++v)
        if (v != source && arrival[v] != kUnreached) reached.set(v);
    return reached;
}

DiGraph reachability_graph(const TemporalGraph &tg, const Setting &s) {
    check_setting(tg, s);
    DiGraph g(tg.n());
    for (int u = 0; u < tg.n(); ++u) {
        Bits r = reachable_set(tg, s, u);
        for (int v = r.first(); v != -1; v = r.next(v)) g.add_arc(u, v);
    }
    return g;
}

namespace {

struct TarjanState {
    const DiGraph &g;
    std::vector<int> index, low, stack_pos;
    std::vector<int> stack;
    int counter = 0;
    std::vector<std::vector<int>> blocks;

    explicit TarjanState(const DiGraph &g)
        : g(g), index(g.n(), -1), low(g.n(), -1), stack_pos(g.n(), -1) {}

    void visit(int root) {
        // Iterative Tarjan; frames hold the next neighbor to resume at.
        struct Frame {
            int v;
            int next;
        };
        std::vector<Frame> frames{{root, -1}};
        open(root);
        while (!frames.empty()) {
            auto &[v, next] = frames.back();
            int w = g.out(v).next(next);
            if (w != -1) {
                next = w;
                if (index[w] == -1) {
                    open(w);
                    frames.push_back({w, -1});
                } else if (stack_pos[w] != -1) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<int> block(stack.begin() + stack_pos[v], stack.end());
                for (int x : block) stack_pos[x] = -1;
                stack.resize(stack.size() - block.size());
                std::sort(block.begin(), block.end());
                blocks.push_back(std::move(block));
            }
            int child = v;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().v] = std::min(low[frames.back().v], low[child]);
        }
    }

    void open(int v) {
        index[v] = low[v] = counter++;
        stack_pos[v] = (int)stack.size();
        stack.push_back(v);
    }
};

} // namespace

SccPartition scc_partition(const DiGraph &dg) {
    TarjanState state(dg);
    for (int v = 0; v < dg.n(); ++v)
        if (state.index[v] == -1) state.visit(v);
    std::sort(state.blocks.begin(), state.blocks.end(),
              [](const auto &a, const auto &b) { return a.front() < b.front(); });
    SccPartition out;
    out.blocks = std::move(state.blocks);
    out.component.assign(dg.n(), -1);
    for (size_t i = 0; i < out.blocks.size(); ++i)
        for (int v : out.blocks[i]) out.component[v] = (int)i;
    return out;
}

bool is_bidirectional_clique(const DiGraph &dg, const Bits &s) {
    for (int u = s.first(); u != -1; u = s.next(u)) {
        Bits need = s;
        need.reset(u);
        if (!need.is_subset_of(dg.out(u))) return false;
    }
    return true;
}

bool is_bidirectional_clique(const DiGraph &dg, const std::vector<int> &s) {
    Bits b(dg.n());
    for (int v : s) b.set(v);
    return is_bidirectional_clique(dg, b);
}

} // namespace tcc
