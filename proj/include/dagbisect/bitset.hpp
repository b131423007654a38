#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "dagbisect/bitkernels.hpp"

namespace dagbisect {

// Fixed-width bitset sized at runtime. Bits past size() are kept zero so the
// bulk kernels never need tail masking.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void clear() { words_.assign(words_.size(), 0); }

    std::size_t count() const {
        return kernels::active().popcount(words_.data(), words_.size());
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        kernels::active().or_inplace(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        kernels::active().and_inplace(words_.data(), o.words_.data(), words_.size());
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        kernels::active().andnot_inplace(words_.data(), o.words_.data(), words_.size());
        return *this;
    }

    /// |this & o| without materializing the intersection.
    std::size_t and_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        return kernels::active().and_popcount(words_.data(), o.words_.data(), words_.size());
    }
    /// |this \ o|
    std::size_t andnot_count(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        return kernels::active().andnot_popcount(words_.data(), o.words_.data(), words_.size());
    }

    bool is_subset_of(const Bitset& o) const { return andnot_count(o) == 0; }

    /// Index of the lowest set bit; size() if empty.
    std::size_t find_first() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return nbits_;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
                fn(i);
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    const std::uint64_t* data() const { return words_.data(); }
    std::size_t word_count() const { return words_.size(); }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace dagbisect
