#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace cocrit {

// Dynamic bitset over a fixed universe of `universe()` bits.
// Bits past the universe are kept zero so word-wise ops stay exact.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int universe() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set_all() {
        if (nbits_ == 0) return;
        std::fill(w_.begin(), w_.end(), ~uint64_t{0});
        trim();
    }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    // this \ o
    Bitset& subtract(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset minus(Bitset a, const Bitset& b) { return a.subtract(b); }

    bool operator==(const Bitset&) const = default;

    int find_first() const { return find_next(-1); }
    int find_next(int i) const {
        for (size_t wi = (i + 1) >> 6; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            if (int(wi) == ((i + 1) >> 6)) w &= ~uint64_t{0} << ((i + 1) & 63);
            if (w) return int(wi * 64 + std::countr_zero(w));
        }
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                f(int(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

private:
    void trim() {
        if (int r = nbits_ & 63; r != 0) w_.back() &= (uint64_t{1} << r) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace cocrit
