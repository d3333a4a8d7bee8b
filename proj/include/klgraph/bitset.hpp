#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace klgraph {

// Fixed-capacity dynamic bitset used for adjacency rows and vertex masks.
// All binary operations require both operands to have the same capacity.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // First set bit at position >= from, or -1.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) {
                int bit = (wi << 6) + std::countr_zero(w);
                return bit < nbits_ ? bit : -1;
            }
            if (++wi >= static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // this is a subset of o
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    int and_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    template <class F>
    void for_each(F&& fn) const {
        for (int v = next(0); v >= 0; v = next(v + 1)) fn(v);
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace klgraph
