#include "tcc/closedtcc.hpp"

#include "tcc/error.hpp"

namespace tcc {

namespace {

bool qualifies(const TemporalGraph &tg, const Setting &s, const std::vector<int> &verts) {
    TemporalGraph sub = tg.induced(verts);
    for (int u = 0; u < sub.n(); ++u) {
        Bits reached = reachable_set(sub, s, u);
        if (reached.count() != sub.n() - 1) return false;
    }
    return true;
}

// First size-`size` subset (lexicographic) that qualifies, or empty.
std::vector<int> first_qualifying(const TemporalGraph &tg, const Setting &s, int size) {
    std::vector<int> comb(size);
    for (int i = 0; i < size; ++i) comb[i] = i;
    while (true) {
        if (qualifies(tg, s, comb)) return comb;
        int i = size - 1;
        while (i >= 0 && comb[i] == tg.n() - size + i) --i;
        if (i < 0) return {};
        ++comb[i];
        for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
}

} // namespace

TccResult solve_closed_bruteforce(const TemporalGraph &tg, const Setting &s, int k, int cap) {
    if (k < 1) throw Error("KTooSmall", "k must be at least 1");
    if (tg.n() > cap)
        throw Error("InstanceTooLarge", "n = " + std::to_string(tg.n()) +
                                            " exceeds the brute-force cap " + std::to_string(cap));
    TccResult out;
    for (int size = tg.n(); size >= 1; --size) {
        std::vector<int> witness = first_qualifying(tg, s, size);
        if (!witness.empty()) {
            out.size = size;
            out.witness = witness;
            break;
        }
    }
    out.answer = out.size >= k;
    return out;
}

} // namespace tcc
