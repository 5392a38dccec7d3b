#pragma once

#include <vector>

#include "tcc/reachability.hpp"
#include "tcc/temporal_graph.hpp"
#include "tcc/transitivity.hpp"

namespace tcc {

// Outcome of a tcc search: the maximum size found, a witness realizing it,
// and the decision at the queried k. The witness is always a bidirectional
// clique of the instance's reachability graph.
struct TccResult {
    int size = 0;
    std::vector<int> witness;
    bool answer = false; // size >= k
};

// Open-TCC given a transitivity modulator S of dg: iterate over the
// bidirectional-clique subsets S' of S and extend each with the largest
// strongly connected component of the vertices outside S that are
// bidirectionally connected to all of S'. Runs in 2^|S| * poly(n).
//
// Throws NotAModulator (with the violating triple) if dg - S is not
// transitive. Any valid modulator gives the same size, minimum or not.
TccResult solve_with_modulator(const DiGraph &dg, int k, const std::vector<int> &modulator);

// Full pipeline: reachability graph, minimum modulator, then the subset
// algorithm. Runs in 3^delta_vd * poly(n).
TccResult solve(const TemporalGraph &tg, const Setting &s, int k);

// Exact maximum bidirectional clique by branch and bound on the mutual
// graph; the oracle the solver is checked against. Witness is the
// lexicographically least among the maxima. Throws InstanceTooLarge when
// n > cap.
TccResult max_bidirectional_clique_bruteforce(const DiGraph &dg, int cap = 20, int k = 1);

} // namespace tcc
