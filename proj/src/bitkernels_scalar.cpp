#include "dagbisect/bitkernels.hpp"

#include <bit>

namespace dagbisect::kernels {
namespace {

void or_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void and_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void andnot_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

std::size_t popcount(const std::uint64_t* a, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::size_t andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
    return total;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar",    or_inplace, and_inplace,  andnot_inplace,
                         popcount,    and_popcount, andnot_popcount};
    return ops;
}

}  // namespace dagbisect::kernels
