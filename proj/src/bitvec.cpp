#include "starsemi/bitvec.hpp"

#include <bit>

namespace starsemi {

void BitVec::mask_tail() {
    std::size_t used = nbits_ & 63;
    if (used != 0 && !words_.empty()) {
        words_.back() &= (uint64_t(1) << used) - 1;
    }
}

void BitVec::or_shift_self(std::size_t g) {
    if (g == 0 || g >= nbits_) return;
    const std::size_t q = g >> 6;
    const std::size_t r = g & 63;
    const std::size_t nwords = words_.size();
    if (r == 0) {
        for (std::size_t w = q; w < nwords; ++w) {
            words_[w] |= words_[w - q];
        }
    } else if (q == 0) {
        // Shift stays within a word; iterate to a fixpoint so chains of
        // +g steps inside one word are all reached in this pass.
        for (std::size_t w = 0; w < nwords; ++w) {
            uint64_t cur = words_[w];
            if (w > 0) cur |= words_[w - 1] >> (64 - r);
            for (;;) {
                uint64_t nxt = cur | (cur << r);
                if (nxt == cur) break;
                cur = nxt;
            }
            words_[w] = cur;
        }
    } else {
        // Source words are strictly below the target, so they are final
        // by the time we read them in this ascending pass.
        for (std::size_t w = q; w < nwords; ++w) {
            uint64_t src = words_[w - q] << r;
            if (w - q > 0) src |= words_[w - q - 1] >> (64 - r);
            words_[w] |= src;
        }
    }
    mask_tail();
}

std::size_t BitVec::count() const {
    std::size_t total = 0;
    for (uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t BitVec::find_last_unset(std::size_t bound) const {
    if (nbits_ == 0) return npos;
    std::size_t i = bound >= nbits_ ? nbits_ - 1 : bound;
    for (;;) {
        if (!test(i)) return i;
        if (i == 0) return npos;
        --i;
    }
}

void BitVec::resize(std::size_t nbits) {
    if (nbits < nbits_) {
        nbits_ = nbits;
        words_.resize((nbits + 63) / 64);
        mask_tail();
    } else {
        nbits_ = nbits;
        words_.resize((nbits + 63) / 64, 0);
    }
}

}  // namespace starsemi
