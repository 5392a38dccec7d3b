#include <doctest.h>

#include "oracles.hpp"
#include "tcc/error.hpp"
#include "tcc/generators.hpp"
#include "tcc/opentcc.hpp"

using namespace tcc;

namespace {

DiGraph bidirectional_clique(int n) {
    DiGraph dg(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) dg.add_arc(u, v);
    return dg;
}

} // namespace

TEST_CASE("solve_with_modulator on a transitive graph with an empty modulator") {
    DiGraph dg = bidirectional_clique(4);
    TccResult r = solve_with_modulator(dg, 1, {});
    CHECK(r.answer);
    CHECK(r.size == 4);
}

TEST_CASE("clique missing one two-way connection") {
    DiGraph dg = bidirectional_clique(5);
    dg.remove_arc(3, 4);
    dg.remove_arc(4, 3);
    TccResult r = solve_with_modulator(dg, 4, {3});
    CHECK(r.size == 4);
    CHECK(r.answer);
    CHECK(r.size == oracle::max_biclique_subsets(dg));
}

TEST_CASE("NotAModulator reports the violating triple") {
    DiGraph path(3);
    path.add_arc(0, 1);
    path.add_arc(1, 2);
    try {
        solve_with_modulator(path, 1, {});
        CHECK(false);
    } catch (const Error &e) {
        CHECK(e.code() == "NotAModulator");
        CHECK(std::string(e.what()).find("(0,1,2)") != std::string::npos);
    }
}

TEST_CASE("single snapshot clique solves to n") {
    for (int n : {2, 4, 6}) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        TemporalGraph tg = gen_single_snapshot(g);
        TccResult r = solve(tg, setting_for(tg, Strictness::Strict), n);
        CHECK(r.size == n);
        CHECK(r.answer);
    }
}

TEST_CASE("single snapshot openness equals the clique number") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = oracle::random_graph(3 + (int)(seed % 7), 0.4, seed + 5);
        TemporalGraph tg = gen_single_snapshot(g);
        TccResult r = solve(tg, setting_for(tg, Strictness::Strict), 2);
        CHECK(r.size == std::max(oracle::max_clique_subsets(g), g.n() > 0 ? 1 : 0));
    }
}

TEST_CASE("edgeless instance has no component of size two") {
    TemporalGraph tg(4, false, 2);
    TccResult r = solve(tg, setting_for(tg, Strictness::Strict), 2);
    CHECK_FALSE(r.answer);
    CHECK(r.size == 1);
}

TEST_CASE("solver equals the brute force on random instances") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        bool directed = seed % 2 == 0;
        int n = 3 + (int)(seed % 7);
        int lifetime = 1 + (int)(seed % 5);
        double p = 0.15 + 0.1 * (seed % 4);
        TemporalGraph tg = gen_random(n, lifetime, p, directed, seed + 10000);
        for (Strictness str : {Strictness::Strict, Strictness::NonStrict}) {
            Setting s = setting_for(tg, str);
            TccResult fast = solve(tg, s, 2);
            DiGraph gr = reachability_graph(tg, s);
            TccResult slow = max_bidirectional_clique_bruteforce(gr);
            CHECK(fast.size == slow.size);
            CHECK(is_bidirectional_clique(gr, fast.witness));
            CHECK((int)fast.witness.size() == fast.size);
        }
    }
}

TEST_CASE("any valid modulator gives the same size") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        DiGraph dg = oracle::random_digraph(7, 0.3, seed + 21);
        Modulator minimal = min_transitivity_modulator(dg);
        TccResult base = solve_with_modulator(dg, 2, minimal.vertices);
        // Enlarge the modulator by each extra vertex in turn.
        for (int extra = 0; extra < dg.n(); ++extra) {
            std::vector<int> bigger = minimal.vertices;
            if (std::find(bigger.begin(), bigger.end(), extra) != bigger.end()) continue;
            bigger.push_back(extra);
            TccResult r = solve_with_modulator(dg, 2, bigger);
            CHECK(r.size == base.size);
        }
    }
}

TEST_CASE("answers are monotone in k") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        TemporalGraph tg = gen_random(6, 3, 0.35, false, seed + 303);
        Setting s = setting_for(tg, Strictness::NonStrict);
        bool prev = true;
        for (int k = 1; k <= 6; ++k) {
            bool ans = solve(tg, s, k).answer;
            if (!prev) CHECK_FALSE(ans);
            prev = ans;
        }
    }
}

TEST_CASE("brute force on fixed instances") {
    DiGraph arcless(4);
    CHECK(max_bidirectional_clique_bruteforce(arcless).size == 1);

    CHECK(max_bidirectional_clique_bruteforce(bidirectional_clique(6)).size == 6);

    // Mutual graph forming a 5-cycle.
    DiGraph c5(5);
    for (int i = 0; i < 5; ++i) {
        c5.add_arc(i, (i + 1) % 5);
        c5.add_arc((i + 1) % 5, i);
    }
    TccResult r = max_bidirectional_clique_bruteforce(c5);
    CHECK(r.size == 2);
    CHECK(r.size == oracle::max_biclique_subsets(c5));
    CHECK(r.witness == std::vector<int>{0, 1}); // lexicographically least maximum
}

TEST_CASE("brute force witness is the lexicographically least maximum") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        DiGraph dg = oracle::random_digraph(7, 0.4, seed + 606);
        TccResult r = max_bidirectional_clique_bruteforce(dg);
        auto all = oracle::max_bicliques_all(dg);
        REQUIRE(!all.empty());
        CHECK(r.size == (int)all[0].size());
        CHECK(r.witness == *std::min_element(all.begin(), all.end()));
    }
}

TEST_CASE("brute force rejects oversized instances") {
    DiGraph big(21);
    CHECK_THROWS_AS(max_bidirectional_clique_bruteforce(big), Error);
    CHECK_NOTHROW(max_bidirectional_clique_bruteforce(big, 25));
}
