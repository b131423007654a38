#include "dagbisect/exactmath.hpp"

#include <bit>
#include <cassert>

namespace dagbisect {

using i128 = __int128;

int ceil_log2(std::uint64_t x) {
    assert(x >= 1);
    return x <= 1 ? 0 : std::bit_width(x - 1);
}

bool golden_threshold(std::int64_t n, std::int64_t s) {
    // s ≥ n/φ²  ⟺  2s ≥ (3-√5)n  ⟺  √5·n ≥ 3n-2s  ⟺  5n² ≥ (3n-2s)²
    // (3n-2s ≥ 0 holds for s ≤ n), which simplifies to 3ns ≥ n² + s².
    return i128{3} * n * s >= i128{n} * n + i128{s} * s;
}

bool le_n_over_phi(std::int64_t m, std::int64_t n) {
    // m ≤ n/φ  ⟺  √5·m ≤ 2n-m  ⟺  5m² ≤ (2n-m)²  ⟺  m² + nm ≤ n².
    return i128{m} * m + i128{n} * m <= i128{n} * n;
}

bool le_n_over_phi2(std::int64_t m, std::int64_t n) {
    // Complements golden_threshold; m = n/φ² is impossible, so ties are moot.
    return i128{3} * n * m <= i128{n} * n + i128{m} * m;
}

bool phi_pow_ge(int t, std::int64_t m) {
    assert(t >= 0 && m >= 1);
    if (t == 0) return m <= 1;
    // φ^t = fib(t)·φ + fib(t-1) with fib(0)=0, fib(1)=1. Then
    // φ^t ≥ m  ⟺  √5·fib(t) ≥ 2(m - fib(t-1)) - fib(t),
    // settled by squaring once the sign of the right side is known.
    i128 fprev = 0, f = 1;  // fib(t-1), fib(t)
    for (int i = 1; i < t; ++i) {
        i128 nxt = fprev + f;
        fprev = f;
        f = nxt;
        if (f > (i128{1} << 100)) return true;  // φ^t astronomically large
    }
    i128 r = 2 * (i128{m} - fprev) - f;
    if (r <= 0) return true;
    return 5 * f * f >= r * r;
}

int ceil_log_phi(std::int64_t m) {
    assert(m >= 1);
    int t = 0;
    while (!phi_pow_ge(t, m)) ++t;
    return t;
}

bool within_ratio_log_bound(int queries, std::int64_t n, int delta) {
    // q·log2((Δ+1)/Δ) ≤ log2(n)  ⟺  (Δ+1)^q ≤ n·Δ^q.
    assert(queries >= 0 && n >= 1 && delta >= 1);
    i128 lhs = 1, rhs = n;
    for (int i = 0; i < queries; ++i) {
        lhs *= delta + 1;
        rhs *= delta;
        if (rhs > (i128{1} << 120)) return true;
        if (lhs > (i128{1} << 120)) return false;
    }
    return lhs <= rhs;
}

bool within_golden_log_bound(int queries, std::int64_t n) {
    assert(n >= 1);
    if (queries <= 1) return true;
    // q ≤ log_φ(n)+1  ⟺  φ^(q-1) ≤ n. Equality is impossible for q ≥ 2, so
    // this is the exact complement of φ^(q-1) ≥ n.
    return !phi_pow_ge(queries - 1, n);
}

}  // namespace dagbisect
