#include "tcc/opentcc.hpp"

#include <algorithm>
#include <numeric>

#include "tcc/error.hpp"

namespace tcc {

namespace {

// Popcount-ascending subset masks, ties by numeric value. Small |S| yes-
// subsets come first so decision instances surface early.
std::vector<uint32_t> subset_order(int count) {
    std::vector<uint32_t> masks(uint64_t(1) << count);
    std::iota(masks.begin(), masks.end(), 0);
    std::stable_sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    return masks;
}

} // namespace

TccResult solve_with_modulator(const DiGraph &dg, int k, const std::vector<int> &modulator) {
    if (k < 1) throw Error("KTooSmall", "k must be at least 1");
    std::vector<int> mod = modulator;
    std::sort(mod.begin(), mod.end());
    mod.erase(std::unique(mod.begin(), mod.end()), mod.end());
    Bits mod_bits(dg.n());
    for (int v : mod) {
        if (v < 0 || v >= dg.n())
            throw Error("SourceOutOfRange", "modulator vertex " + std::to_string(v) + " out of range");
        mod_bits.set(v);
    }
    Bits outside = Bits::all(dg.n()) - mod_bits;
    if (auto viol = find_violation(dg, outside)) {
        auto [u, v, w] = *viol;
        throw Error("NotAModulator", "removing the given set leaves the violation (" +
                                         std::to_string(u) + "," + std::to_string(v) + "," +
                                         std::to_string(w) + ")");
    }
    if (mod.size() > 30)
        throw Error("InstanceTooLarge", "modulator of size " + std::to_string(mod.size()) +
                                            " exceeds the 2^|S| subset search limit (30)");

    TccResult best;
    for (uint32_t mask : subset_order((int)mod.size())) {
        std::vector<int> chosen;
        for (size_t i = 0; i < mod.size(); ++i)
            if (mask & (uint32_t(1) << i)) chosen.push_back(mod[i]);
        if (!is_bidirectional_clique(dg, chosen)) continue;

        // Vertices outside S bidirectionally connected to all of `chosen`;
        // for the empty subset this is all of V \ S.
        std::vector<int> extension;
        for (int v = outside.first(); v != -1; v = outside.next(v)) {
            bool ok = true;
            for (int u : chosen)
                if (!dg.has_arc(u, v) || !dg.has_arc(v, u)) {
                    ok = false;
                    break;
                }
            if (ok) extension.push_back(v);
        }

        int block_size = 0;
        std::vector<int> block;
        if (!extension.empty()) {
            DiGraph sub = dg.induced(extension);
            SccPartition sccs = scc_partition(sub);
            for (const auto &b : sccs.blocks)
                if ((int)b.size() > block_size) {
                    block_size = (int)b.size();
                    block.clear();
                    for (int x : b) block.push_back(extension[x]);
                }
        }
        int size = (int)chosen.size() + block_size;
        if (size > best.size) {
            best.size = size;
            best.witness = chosen;
            best.witness.insert(best.witness.end(), block.begin(), block.end());
            std::sort(best.witness.begin(), best.witness.end());
        }
    }
    best.answer = best.size >= k;
    if (!is_bidirectional_clique(dg, best.witness))
        throw std::logic_error("solve_with_modulator: witness validation failed");
    return best;
}

TccResult solve(const TemporalGraph &tg, const Setting &s, int k) {
    DiGraph gr = reachability_graph(tg, s);
    Modulator mod = min_transitivity_modulator(gr);
    return solve_with_modulator(gr, k, mod.vertices);
}

TccResult max_bidirectional_clique_bruteforce(const DiGraph &dg, int cap, int k) {
    if (dg.n() > cap)
        throw Error("InstanceTooLarge", "n = " + std::to_string(dg.n()) +
                                            " exceeds the brute-force cap " + std::to_string(cap));
    CliqueResult mc = max_clique(mutual_graph(dg));
    TccResult out;
    out.size = mc.size;
    out.witness = mc.witness;
    out.answer = out.size >= k;
    return out;
}

} // namespace tcc
