#include <doctest.h>

#include "oracles.hpp"
#include "tcc/error.hpp"
#include "tcc/generators.hpp"
#include "tcc/reachability.hpp"

using namespace tcc;

namespace {

Setting strict_for(const TemporalGraph &tg) { return setting_for(tg, Strictness::Strict); }
Setting nonstrict_for(const TemporalGraph &tg) { return setting_for(tg, Strictness::NonStrict); }

} // namespace

TEST_CASE("equal labels chain only non-strictly") {
    TemporalGraph tg(3, false, 2);
    tg.add_edge(0, 1, 2);
    tg.add_edge(1, 2, 2);

    Bits ns = reachable_set(tg, nonstrict_for(tg), 0);
    CHECK(ns.to_vector() == std::vector<int>{1, 2});

    Bits st = reachable_set(tg, strict_for(tg), 0);
    CHECK(st.to_vector() == std::vector<int>{1});
}

TEST_CASE("non-strict propagation reaches a same-label fixpoint") {
    // A long path all at one timestep: non-strict reaches the far end.
    TemporalGraph tg(6, false, 1);
    for (int v = 0; v + 1 < 6; ++v) tg.add_edge(v, v + 1, 1);
    Bits ns = reachable_set(tg, nonstrict_for(tg), 0);
    CHECK(ns.count() == 5);
    Bits st = reachable_set(tg, strict_for(tg), 0);
    CHECK(st.count() == 1);
}

TEST_CASE("star reachability separates the Y side") {
    TemporalGraph tg = gen_star(2); // X = {0,1} at times 1,3; Y = {2,3} at time 2; center 4
    Bits r = reachable_set(tg, strict_for(tg), 2);
    CHECK(r.test(4));
    CHECK(r.test(0));
    CHECK(r.test(1));
    CHECK_FALSE(r.test(3)); // no Y vertex reaches another Y vertex
}

TEST_CASE("source out of range") {
    TemporalGraph tg(2, false, 1);
    CHECK_THROWS_AS(reachable_set(tg, strict_for(tg), 2), Error);
    CHECK_THROWS_AS(reachable_set(tg, strict_for(tg), -1), Error);
}

TEST_CASE("setting orientation must match") {
    TemporalGraph tg(2, false, 1);
    Setting wrong{Strictness::Strict, Orientation::Directed};
    CHECK_THROWS_AS(reachable_set(tg, wrong, 0), Error);
}

TEST_CASE("single snapshot clique gives a bidirectional clique") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    TemporalGraph tg = gen_single_snapshot(k3);
    DiGraph gr = reachability_graph(tg, strict_for(tg));
    CHECK(gr.arc_count() == 6);
    CHECK(is_bidirectional_clique(gr, Bits::all(3)));
}

TEST_CASE("edgeless graph has an arcless reachability graph") {
    TemporalGraph tg(4, false, 2);
    DiGraph gr = reachability_graph(tg, strict_for(tg));
    CHECK(gr.arc_count() == 0);
}

TEST_CASE("reachability graph equals path enumeration on small instances") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        bool directed = seed % 2 == 0;
        int n = 3 + (int)(seed % 5);        // <= 7
        int lifetime = 1 + (int)(seed % 4); // <= 4
        double p = (seed % 3 == 0) ? 0.15 : 0.3;
        TemporalGraph tg = gen_random(n, lifetime, p, directed, seed * 7 + 1);
        if (tg.edge_count() > 12) continue;
        for (Strictness str : {Strictness::Strict, Strictness::NonStrict}) {
            Setting s = setting_for(tg, str);
            DiGraph gr = reachability_graph(tg, s);
            for (int u = 0; u < n; ++u) {
                std::set<int> expected =
                    oracle::reachable_paths(tg, str == Strictness::Strict, u);
                std::set<int> got;
                for (int v = gr.out(u).first(); v != -1; v = gr.out(u).next(v)) got.insert(v);
                CHECK(got == expected);
            }
        }
    }
}

TEST_CASE("strict reachability is contained in non-strict") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        TemporalGraph tg = gen_random(6, 4, 0.3, seed % 2 == 0, seed + 500);
        DiGraph st = reachability_graph(tg, strict_for(tg));
        DiGraph ns = reachability_graph(tg, nonstrict_for(tg));
        for (int u = 0; u < tg.n(); ++u) CHECK(st.out(u).is_subset_of(ns.out(u)));
    }
}

TEST_CASE("on proper graphs strict and non-strict coincide") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        TemporalGraph tg = gen_random(7, 5, 0.25, seed % 2 == 0, seed + 900);
        if (!is_proper(tg)) {
            // Thin the instance snapshot-wise into a proper one.
            TemporalGraph thin(tg.n(), tg.directed(), tg.lifetime());
            std::vector<char> used(tg.n() * (tg.lifetime() + 1), 0);
            for (const TimeEdge &e : tg.edges()) {
                char &bu = used[e.u * (tg.lifetime() + 1) + e.t];
                char &bv = used[e.v * (tg.lifetime() + 1) + e.t];
                if (!bu && !bv) {
                    thin.add_edge(e.u, e.v, e.t);
                    bu = bv = 1;
                }
            }
            tg = thin;
        }
        REQUIRE(is_proper(tg));
        CHECK(reachability_graph(tg, strict_for(tg)) == reachability_graph(tg, nonstrict_for(tg)));
    }
}

TEST_CASE("reachability is invariant under increasing relabelings") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        TemporalGraph tg = gen_random(6, 4, 0.3, seed % 2 == 0, seed + 1300);
        // t -> t^2 + 3 is strictly increasing.
        TemporalGraph relabeled(tg.n(), tg.directed(), tg.lifetime() * tg.lifetime() + 3);
        for (const TimeEdge &e : tg.edges()) relabeled.add_edge(e.u, e.v, e.t * e.t + 3);
        for (Strictness str : {Strictness::Strict, Strictness::NonStrict}) {
            DiGraph a = reachability_graph(tg, setting_for(tg, str));
            DiGraph b = reachability_graph(relabeled, setting_for(relabeled, str));
            CHECK(a == b);
        }
    }
}

TEST_CASE("scc partition on fixed digraphs") {
    DiGraph cl(3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            if (u != v) cl.add_arc(u, v);
    SccPartition p = scc_partition(cl);
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0] == std::vector<int>{0, 1, 2});

    DiGraph path(3);
    path.add_arc(0, 1);
    path.add_arc(1, 2);
    SccPartition q = scc_partition(path);
    CHECK(q.blocks.size() == 3);
    CHECK(q.component == std::vector<int>{0, 1, 2});
}

TEST_CASE("scc partition matches the mutual-closure classes") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        DiGraph dg = oracle::random_digraph(8, 0.2 + 0.05 * (seed % 5), seed + 42);
        SccPartition p = scc_partition(dg);
        CHECK(p.blocks == oracle::scc_closure_classes(dg));
        // Blocks ordered by smallest member.
        for (size_t i = 1; i < p.blocks.size(); ++i)
            CHECK(p.blocks[i - 1].front() < p.blocks[i].front());
    }
}

TEST_CASE("bidirectional clique checks") {
    DiGraph dg(3);
    dg.add_arc(0, 1);
    CHECK(is_bidirectional_clique(dg, std::vector<int>{}));
    CHECK(is_bidirectional_clique(dg, std::vector<int>{1}));
    CHECK_FALSE(is_bidirectional_clique(dg, std::vector<int>{0, 1}));
    dg.add_arc(1, 0);
    CHECK(is_bidirectional_clique(dg, std::vector<int>{0, 1}));
}

TEST_CASE("in a transitive digraph every scc block is a bidirectional clique") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        DiGraph dg = oracle::random_digraph(7, 0.25, seed + 77);
        // Close it to make it transitive.
        DiGraph closed(7);
        auto classes = oracle::scc_closure_classes(dg);
        std::vector<std::vector<char>> reach(7, std::vector<char>(7, 0));
        for (auto [u, v] : dg.arcs()) reach[u][v] = 1;
        for (int k = 0; k < 7; ++k)
            for (int u = 0; u < 7; ++u)
                for (int v = 0; v < 7; ++v)
                    if (reach[u][k] && reach[k][v]) reach[u][v] = 1;
        for (int u = 0; u < 7; ++u)
            for (int v = 0; v < 7; ++v)
                if (u != v && reach[u][v]) closed.add_arc(u, v);
        REQUIRE(oracle::transitive_triple_scan(closed));
        for (const auto &block : scc_partition(closed).blocks)
            CHECK(is_bidirectional_clique(closed, block));
    }
}

TEST_CASE("digraph serialization round trip") {
    DiGraph dg(4);
    dg.add_arc(2, 1);
    dg.add_arc(0, 3);
    CHECK(dg.serialize() == "dg 4\n0 3\n2 1\n");
    CHECK(DiGraph::parse(dg.serialize()) == dg);
}
