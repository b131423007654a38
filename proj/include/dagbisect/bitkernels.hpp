#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Word-level kernels behind Bitset. Every operation has a scalar reference
// implementation; wider variants (AVX2 on x86-64, NEON on aarch64) are
// selected at runtime and must be bit-identical to the scalar ones.

namespace dagbisect::kernels {

struct Ops {
    const char* name;
    void (*or_inplace)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    void (*and_inplace)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    void (*andnot_inplace)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    std::size_t (*popcount)(const std::uint64_t* a, std::size_t nwords);
    std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
    std::size_t (*andnot_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
};

/// Scalar reference kernels; always available.
const Ops& scalar_ops();

#if defined(DAGBISECT_WITH_AVX2)
/// AVX2 kernels; call only when the CPU supports AVX2.
const Ops& avx2_ops();
#endif

#if defined(DAGBISECT_WITH_NEON)
const Ops& neon_ops();
#endif

/// Kernels currently in use (auto-detected on first call).
const Ops& active();

/// Force a backend: "auto", "scalar", "avx2", "neon".
/// Returns false if the backend is unavailable on this machine.
bool select(std::string_view backend);

}  // namespace dagbisect::kernels
