#pragma once

#include <bit>
#include <cstdint>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace zombit::bits {

inline constexpr uint64_t kWordBits = 64;

inline int popcount(uint64_t w) noexcept { return std::popcount(w); }

/// Bit index (0-based, LSB first) of the k-th set bit of w, k in [1, popcount(w)].
inline unsigned select_in_word(uint64_t w, unsigned k) noexcept {
#if defined(__BMI2__)
    return static_cast<unsigned>(std::countr_zero(_pdep_u64(uint64_t{1} << (k - 1), w)));
#else
    // byte-stepping fallback
    unsigned base = 0;
    for (;;) {
        unsigned c = static_cast<unsigned>(std::popcount(w & 0xffu));
        if (k <= c) break;
        k -= c;
        w >>= 8;
        base += 8;
    }
    uint64_t b = w & 0xffu;
    while (--k) b &= b - 1; // drop k-1 lowest set bits
    return base + static_cast<unsigned>(std::countr_zero(b));
#endif
}

/// Mask with the lowest nbits bits set; nbits in [0, 64].
inline uint64_t low_mask(uint64_t nbits) noexcept {
    return nbits >= 64 ? ~uint64_t{0} : (uint64_t{1} << nbits) - 1;
}

} // namespace zombit::bits
