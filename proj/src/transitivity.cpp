#include "tcc/transitivity.hpp"

#include <algorithm>

namespace tcc {

std::optional<Violation> find_violation(const DiGraph &dg, const Bits &alive) {
    for (int u = alive.first(); u != -1; u = alive.next(u)) {
        Bits mid = dg.out(u) & alive;
        for (int v = mid.first(); v != -1; v = mid.next(v)) {
            // Candidate w: out-neighbor of v, alive, not already reached
            // from u, and distinct from u.
            Bits cand = (dg.out(v) & alive) - dg.out(u);
            cand.reset(u);
            int w = cand.first();
            if (w != -1) return Violation{u, v, w};
        }
    }
    return std::nullopt;
}

std::optional<Violation> find_violation(const DiGraph &dg) {
    return find_violation(dg, Bits::all(dg.n()));
}

bool is_transitive(const DiGraph &dg) { return !find_violation(dg).has_value(); }

namespace {

bool modulator_rec(const DiGraph &dg, Bits &alive, int budget, std::vector<int> &removed) {
    auto viol = find_violation(dg, alive);
    if (!viol) return true;
    if (budget == 0) return false;
    auto [u, v, w] = *viol;
    for (int x : {u, v, w}) {
        alive.reset(x);
        removed.push_back(x);
        if (modulator_rec(dg, alive, budget - 1, removed)) return true;
        removed.pop_back();
        alive.set(x);
    }
    return false;
}

} // namespace

Modulator min_transitivity_modulator(const DiGraph &dg) {
    for (int budget = 0; budget <= dg.n(); ++budget) {
        Bits alive = Bits::all(dg.n());
        std::vector<int> removed;
        if (modulator_rec(dg, alive, budget, removed)) {
            std::sort(removed.begin(), removed.end());
            return Modulator{removed};
        }
    }
    return Modulator{}; // unreachable: removing all vertices is transitive
}

DiGraph apply(const DiGraph &dg, const ArcModSet &m) {
    DiGraph out = dg;
    for (auto [u, v] : m.deletions) out.remove_arc(u, v);
    for (auto [u, v] : m.additions) out.add_arc(u, v);
    return out;
}

DiGraph transitive_closure(const DiGraph &dg) {
    DiGraph out = dg;
    std::vector<Bits> reach(dg.n());
    for (int u = 0; u < dg.n(); ++u) reach[u] = dg.out(u);
    for (int k = 0; k < dg.n(); ++k)
        for (int u = 0; u < dg.n(); ++u)
            if (reach[u].test(k)) reach[u] |= reach[k];
    for (int u = 0; u < dg.n(); ++u) {
        reach[u].reset(u); // closure carries no self-loops
        for (int v = reach[u].first(); v != -1; v = reach[u].next(v)) out.add_arc(u, v);
    }
    return out;
}

namespace {

std::vector<int> collect_endpoints(const ArcModSet &m, int n) {
    Bits seen(n);
    for (auto [u, v] : m.additions) {
        seen.set(u);
        seen.set(v);
    }
    for (auto [u, v] : m.deletions) {
        seen.set(u);
        seen.set(v);
    }
    return seen.to_vector();
}

} // namespace

ArcModSet arc_addition_set(const DiGraph &dg) {
    DiGraph closure = transitive_closure(dg);
    ArcModSet m;
    for (int u = 0; u < dg.n(); ++u) {
        Bits added = closure.out(u) - dg.out(u);
        for (int v = added.first(); v != -1; v = added.next(v)) m.additions.emplace_back(u, v);
    }
    m.endpoints = collect_endpoints(m, dg.n());
    return m;
}

namespace {

struct EditSearch {
    int n;
    bool allow_additions;
    std::vector<Bits> frozen; // arcs (u,v) whose state may not change below here

    bool frozen_arc(int u, int v) const { return frozen[u].test(v); }

    bool rec(DiGraph &g, int budget, ArcModSet &m) {
        auto viol = find_violation(g);
        if (!viol) return true;
        if (budget == 0) return false;
        auto [u, v, w] = *viol;
        // delete (u,v)
        if (!frozen_arc(u, v)) {
            g.remove_arc(u, v);
            frozen[u].set(v);
            m.deletions.emplace_back(u, v);
            if (rec(g, budget - 1, m)) return true;
            m.deletions.pop_back();
            frozen[u].reset(v);
            g.add_arc(u, v);
        }
        // delete (v,w)
        if (!frozen_arc(v, w)) {
            g.remove_arc(v, w);
            frozen[v].set(w);
            m.deletions.emplace_back(v, w);
            if (rec(g, budget - 1, m)) return true;
            m.deletions.pop_back();
            frozen[v].reset(w);
            g.add_arc(v, w);
        }
        // add (u,w)
        if (allow_additions && !frozen_arc(u, w)) {
            g.add_arc(u, w);
            frozen[u].set(w);
            m.additions.emplace_back(u, w);
            if (rec(g, budget - 1, m)) return true;
            m.additions.pop_back();
            frozen[u].reset(w);
            g.remove_arc(u, w);
        }
        return false;
    }
};

} // namespace

std::optional<ArcModSet> min_arc_modification_set(const DiGraph &dg, int budget,
                                                  bool allow_additions) {
    for (int b = 0; b <= budget; ++b) {
        EditSearch search{dg.n(), allow_additions, std::vector<Bits>(dg.n(), Bits(dg.n()))};
        DiGraph g = dg;
        ArcModSet m;
        if (search.rec(g, b, m)) {
            auto by_pair = [](const std::pair<int, int> &a, const std::pair<int, int> &b2) {
                return a < b2;
            };
            std::sort(m.additions.begin(), m.additions.end(), by_pair);
            std::sort(m.deletions.begin(), m.deletions.end(), by_pair);
            m.endpoints = collect_endpoints(m, dg.n());
            return m;
        }
    }
    return std::nullopt;
}

} // namespace tcc
