#include "dagbisect/bitkernels.hpp"

#include <atomic>

namespace dagbisect::kernels {
namespace {

const Ops* detect() {
#if defined(DAGBISECT_WITH_AVX2)
    if (__builtin_cpu_supports("avx2")) return &avx2_ops();
#endif
#if defined(DAGBISECT_WITH_NEON)
    return &neon_ops();
#endif
    return &scalar_ops();
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (ops == nullptr) {
        ops = detect();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

bool select(std::string_view backend) {
    if (backend == "auto") {
        g_active.store(detect(), std::memory_order_release);
        return true;
    }
    if (backend == "scalar") {
        g_active.store(&scalar_ops(), std::memory_order_release);
        return true;
    }
#if defined(DAGBISECT_WITH_AVX2)
    if (backend == "avx2" && __builtin_cpu_supports("avx2")) {
        g_active.store(&avx2_ops(), std::memory_order_release);
        return true;
    }
#endif
#if defined(DAGBISECT_WITH_NEON)
    if (backend == "neon") {
        g_active.store(&neon_ops(), std::memory_order_release);
        return true;
    }
#endif
    return false;
}

}  // namespace dagbisect::kernels
