#include <doctest.h>

#include "oracles.hpp"
#include "tcc/error.hpp"
#include "tcc/generators.hpp"
#include "tcc/kernel.hpp"
#include "tcc/temporal_graph.hpp"

using namespace tcc;

TEST_CASE("parse smallest nonempty graph") {
    TemporalGraph tg = parse_temporal_graph("tg undirected 2 1\n0 1 1\n");
    CHECK(tg.n() == 2);
    CHECK_FALSE(tg.directed());
    CHECK(tg.lifetime() == 1);
    REQUIRE(tg.edge_count() == 1);
    CHECK(tg.edges()[0] == TimeEdge{0, 1, 1});
}

TEST_CASE("parse directed two-arc path") {
    TemporalGraph tg = parse_temporal_graph("tg directed 3 2\n0 1 1\n1 2 2\n");
    CHECK(tg.directed());
    CHECK(tg.edge_count() == 2);
    CHECK(tg.has_edge(0, 1, 1));
    CHECK(tg.has_edge(1, 2, 2));
    CHECK_FALSE(tg.has_edge(1, 0, 1));
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_temporal_graph("tg undirected 2 1\n0 1 5\n"),
                         "line 2: timestep 5 out of range [1,1]", Error);
    CHECK_THROWS_AS(parse_temporal_graph("tg undirected 2 1\n0 2 1\n"), Error);
    CHECK_THROWS_AS(parse_temporal_graph("tg undirected 2 1\n0 0 1\n"), Error);
    CHECK_THROWS_AS(parse_temporal_graph("tg undirected 2 2\n0 1 1\n1 0 1\n"), Error);
    CHECK_THROWS_AS(parse_temporal_graph("tg sideways 2 1\n"), Error);
    CHECK_THROWS_AS(parse_temporal_graph("tg undirected 2 0\n"), Error);
    CHECK_THROWS_AS(parse_temporal_graph(""), Error);
    try {
        parse_temporal_graph("tg undirected 3 1\n0 1 1\n# fine\n7 1 1\n");
        CHECK(false);
    } catch (const Error &e) {
        CHECK(e.code() == "ParseError");
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("comments and undirected canonicalization") {
    TemporalGraph tg = parse_temporal_graph("# header comment\ntg undirected 3 2\n2 0 1\n# mid\n1 2 2\n");
    CHECK(tg.has_edge(0, 2, 1));
    CHECK(tg.has_edge(2, 0, 1));
    CHECK(tg.edges()[0] == TimeEdge{0, 2, 1});
}

TEST_CASE("parse then serialize is identity") {
    const char *docs[] = {
        "tg undirected 2 1\n0 1 1\n",
        "tg directed 3 2\n0 1 1\n1 2 2\n",
        "tg undirected 4 3\n",
    };
    for (const char *doc : docs) {
        TemporalGraph tg = parse_temporal_graph(doc);
        CHECK(tg.serialize() == doc);
        CHECK(parse_temporal_graph(tg.serialize()) == tg);
    }
    for (uint64_t seed = 0; seed < 20; ++seed) {
        TemporalGraph tg = gen_random(6, 4, 0.4, seed % 2 == 0, seed);
        CHECK(parse_temporal_graph(tg.serialize()) == tg);
    }
}

TEST_CASE("is_proper on matchings and paths") {
    TemporalGraph matching(4, false, 1);
    matching.add_edge(0, 1, 1);
    matching.add_edge(2, 3, 1);
    CHECK(is_proper(matching));

    TemporalGraph path(3, false, 1);
    path.add_edge(0, 1, 1);
    path.add_edge(1, 2, 1);
    CHECK_FALSE(is_proper(path)); // middle vertex has degree 2

    TemporalGraph spread(3, false, 2);
    spread.add_edge(0, 1, 1);
    spread.add_edge(1, 2, 2);
    CHECK(is_proper(spread));
}

TEST_CASE("is_proper directed uses in/out degrees") {
    TemporalGraph fanout(3, true, 1);
    fanout.add_edge(0, 1, 1);
    fanout.add_edge(0, 2, 1);
    CHECK(is_proper(fanout)); // out-degree 2 is fine while in-degree is 0

    TemporalGraph through(3, true, 1);
    through.add_edge(0, 1, 1);
    through.add_edge(1, 2, 1);
    CHECK_FALSE(is_proper(through)); // middle vertex has in 1 and out 1
}

TEST_CASE("semaphore encoding is proper and simple") {
    Graph k5(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) k5.add_edge(u, v);
    SemaphoreEncoding enc = clique_to_open_tcc(k5, 5);
    CHECK(is_proper(enc.tg));
    CHECK(is_simple(enc.tg));
}

TEST_CASE("is_simple") {
    TemporalGraph repeated(2, false, 3);
    repeated.add_edge(0, 1, 1);
    repeated.add_edge(0, 1, 3);
    CHECK_FALSE(is_simple(repeated));

    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(is_simple(gen_single_snapshot(g)));

    // Opposite arcs at different times are still simple.
    TemporalGraph arcs(2, true, 2);
    arcs.add_edge(0, 1, 1);
    arcs.add_edge(1, 0, 2);
    CHECK(is_simple(arcs));
}

TEST_CASE("closed-hard gadget repeats an edge") {
    TemporalGraph base(2, false, 1);
    base.add_edge(0, 1, 1);
    ClosedHardInstance inst = gen_closed_hard(base, 5);
    CHECK_FALSE(is_simple(inst.tg)); // {v,v'} exists at L+1 and L+2n+4
}

TEST_CASE("underlying graph collapses duplicates") {
    TemporalGraph tg(2, false, 2);
    tg.add_edge(0, 1, 1);
    tg.add_edge(0, 1, 2);
    Graph g = underlying_graph(tg);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));

    TemporalGraph empty(3, false, 2);
    CHECK(underlying_graph(empty).edge_count() == 0);
}

TEST_CASE("underlying graph of the star") {
    Graph g = underlying_graph(gen_star(3));
    CHECK(g.n() == 7);
    CHECK(g.edge_count() == 6);
    for (int leaf = 0; leaf < 6; ++leaf) CHECK(g.has_edge(leaf, 6));
}

TEST_CASE("underlying digraph keeps orientation") {
    TemporalGraph tg(3, true, 2);
    tg.add_edge(0, 1, 1);
    tg.add_edge(0, 1, 2);
    tg.add_edge(1, 0, 2);
    DiGraph g = underlying_digraph(tg);
    CHECK(g.arc_count() == 2);
    CHECK(g.has_arc(0, 1));
    CHECK(g.has_arc(1, 0));
    CHECK(underlying_skeleton(tg).edge_count() == 1);
}

TEST_CASE("underlying graph invariant under snapshot permutation") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        TemporalGraph tg = gen_random(6, 4, 0.3, false, seed);
        // Reverse the timestep order.
        TemporalGraph reversed(tg.n(), false, tg.lifetime());
        for (const TimeEdge &e : tg.edges()) {
            int rt = tg.lifetime() + 1 - e.t;
            if (!reversed.has_edge(e.u, e.v, rt)) reversed.add_edge(e.u, e.v, rt);
        }
        CHECK(underlying_graph(tg) == underlying_graph(reversed));
    }
}

TEST_CASE("predicates agree with direct recomputation on random instances") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        TemporalGraph tg = gen_random(6, 3, 0.25, seed % 2 == 0, seed + 100);
        // is_simple, recomputed.
        int dup = 0;
        for (const TimeEdge &a : tg.edges())
            for (const TimeEdge &b : tg.edges())
                if (a.u == b.u && a.v == b.v && a.t != b.t) dup = 1;
        CHECK(is_simple(tg) == (dup == 0));
        // is_proper, recomputed per snapshot.
        bool proper = true;
        for (int t = 1; t <= tg.lifetime(); ++t)
            for (int v = 0; v < tg.n(); ++v) {
                int din = 0, dout = 0;
                for (const TimeEdge &e : tg.edges()) {
                    if (e.t != t) continue;
                    if (e.u == v) ++dout;
                    if (e.v == v) ++din;
                }
                if (tg.directed() ? (din > 0 && dout > 0) : (din + dout > 1)) proper = false;
            }
        CHECK(is_proper(tg) == proper);
    }
}
