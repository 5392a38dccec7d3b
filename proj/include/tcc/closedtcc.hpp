#pragma once

#include "tcc/opentcc.hpp"

namespace tcc {

// Exact maximum closed tcc by subset enumeration, largest size first. A
// set C qualifies when the reachability graph of the temporal graph
// induced on C (keeping only time-edges with both endpoints in C, original
// timesteps and lifetime) is a complete bidirectional clique on C.
// Deterministic: within one size, candidate sets are tried in
// lexicographic order. Throws InstanceTooLarge when n > cap.
TccResult solve_closed_bruteforce(const TemporalGraph &tg, const Setting &s, int k,
                                  int cap = 15);

} // namespace tcc
