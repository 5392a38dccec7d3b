#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tcc {

// Fixed-size bitset sized at runtime. Vertex sets and adjacency rows are
// stored this way so the branching searches stay cheap.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bits all(int n) {
        Bits b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    // First set bit, or -1.
    int first() const { return next(-1); }

    // First set bit strictly after `i`, or -1.
    int next(int i) const {
        int word = (i + 1) >> 6;
        if (word >= (int)w_.size()) return -1;
        uint64_t x = w_[word] & (~uint64_t(0) << ((i + 1) & 63));
        while (true) {
            if (x) return (word << 6) + std::countr_zero(x);
            if (++word >= (int)w_.size()) return -1;
            x = w_[word];
        }
    }

    Bits &operator|=(const Bits &o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits &operator&=(const Bits &o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // Set difference.
    Bits &operator-=(const Bits &o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator|(Bits a, const Bits &b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits &b) { return a &= b; }
    friend Bits operator-(Bits a, const Bits &b) { return a -= b; }

    bool is_subset_of(const Bits &o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bits &o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    friend bool operator==(const Bits &a, const Bits &b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v != -1; v = next(v)) out.push_back(v);
        return out;
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace tcc
