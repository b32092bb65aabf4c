#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace starsemi {

// Fixed-size bit vector used for semigroup membership tables.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    // In-place closure step of the reachability sieve: after the call,
    // bit i is set iff bit i or bit (i - g) was reachable, propagated
    // transitively (one ascending pass closes membership under +g).
    void or_shift_self(std::size_t g);

    std::size_t count() const;

    // Largest set/unset index <= bound, or npos when none exists.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find_last_unset(std::size_t bound) const;

    // Change the size to nbits; new bits are zero.
    void resize(std::size_t nbits);

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

private:
    void mask_tail();

    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace starsemi
