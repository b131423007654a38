// NEON variants of the bitset kernels (aarch64). NEON is baseline on
// aarch64, so no runtime feature probe is needed.

#include "dagbisect/bitkernels.hpp"

#if defined(DAGBISECT_WITH_NEON)

#include <arm_neon.h>

#include <bit>

namespace dagbisect::kernels {
namespace {

void or_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, vorrq_u64(d, s));
    }
    for (; i < n; ++i) dst[i] |= src[i];
}

void and_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, vandq_u64(d, s));
    }
    for (; i < n; ++i) dst[i] &= src[i];
}

void andnot_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, vbicq_u64(d, s));
    }
    for (; i < n; ++i) dst[i] &= ~src[i];
}

inline std::size_t popcount128(uint64x2_t v) {
    uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
    return static_cast<std::size_t>(vaddvq_u8(bytes));
}

std::size_t popcount(const std::uint64_t* a, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) total += popcount128(vld1q_u64(a + i));
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        total += popcount128(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::size_t andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        total += popcount128(vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
    return total;
}

}  // namespace

const Ops& neon_ops() {
    static const Ops ops{"neon",      or_inplace, and_inplace,  andnot_inplace,
                         popcount,    and_popcount, andnot_popcount};
    return ops;
}

}  // namespace dagbisect::kernels

#endif  // DAGBISECT_WITH_NEON
