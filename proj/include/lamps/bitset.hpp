#pragma once

#include <cstdint>
#include <vector>

#include "lamps/errors.hpp"

namespace lamps {

/// Fixed-size dynamic bitset packed into 64-bit words.
/// Used for vertex sets, edge sets and GF(2) row vectors throughout.
class Bitset {
public:
    Bitset() : size_(0) {}
    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {
        if (size < 0) throw InternalError("Bitset: negative size");
    }

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(int i, bool value = true) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(int i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator^=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& o) const { return size_ == o.size_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool subset_of(const Bitset& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    /// Sorted-id-list lexicographic order: {0,2} < {1,2} < {1,3}, and a
    /// prefix precedes its extensions ({1} < {1,3}). With the lowest
    /// differing index d, the set holding d is smaller unless the other set
    /// ends before d (then it is a prefix of this one).
    bool lex_less(const Bitset& o) const {
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t diff = words_[k] ^ o.words_[k];
            if (!diff) continue;
            int b = __builtin_ctzll(diff);
            bool mine = (words_[k] >> b) & 1;
            const Bitset& other = mine ? o : *this;
            uint64_t above = other.words_[k] & ~((uint64_t(2) << b) - 1);
            bool other_continues = above != 0;
            for (size_t j = k + 1; !other_continues && j < words_.size(); ++j)
                other_continues = other.words_[j] != 0;
            return mine ? other_continues : !other_continues;
        }
        return false;
    }

    /// Indices of set bits, ascending.
    std::vector<int> ids() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t k = 0; k < words_.size(); ++k) {
            uint64_t w = words_[k];
            while (w) {
                int b = __builtin_ctzll(w);
                out.push_back(int(k) * 64 + b);
                w &= w - 1;
            }
        }
        return out;
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    int size_;
    std::vector<uint64_t> words_;
};

using VertexSet = Bitset;
using EdgeSet = Bitset;

}  // namespace lamps
