#pragma once

#include <cstdint>

// Exact integer comparisons against the irrational thresholds used by the
// search bounds (powers of φ and of 3/2). Every predicate is evaluated in
// integer arithmetic only, so there is no floating-point boundary
// misclassification. Equality with an irrational bound cannot occur, which
// makes strict and non-strict comparisons interchangeable where noted.

namespace dagbisect {

/// ⌈log2(x)⌉ for x ≥ 1.
int ceil_log2(std::uint64_t x);

/// s ≥ n/φ² for 0 ≤ s ≤ n, via the equivalent predicate 3ns ≥ n² + s².
bool golden_threshold(std::int64_t n_live, std::int64_t s);

/// m ≤ n/φ, via m² + nm ≤ n² (valid for 0 ≤ m ≤ n).
bool le_n_over_phi(std::int64_t m, std::int64_t n);

/// m ≤ n/φ², via 3nm ≤ n² + m² (valid for 0 ≤ m ≤ n).
bool le_n_over_phi2(std::int64_t m, std::int64_t n);

/// φ^t ≥ m (t ≥ 0, m ≥ 1), exact via Fibonacci expansion of φ^t.
bool phi_pow_ge(int t, std::int64_t m);

/// ⌈log_φ(m)⌉ for m ≥ 1: the least t with φ^t ≥ m.
int ceil_log_phi(std::int64_t m);

/// queries ≤ log2(n) / log2((Δ+1)/Δ), via (Δ+1)^q ≤ n·Δ^q.
/// Δ = 2 gives the binary-DAG bound log2(n)/log2(3/2).
bool within_ratio_log_bound(int queries, std::int64_t n, int delta);

/// queries ≤ log_φ(n) + 1, via φ^(q-1) ≤ n.
bool within_golden_log_bound(int queries, std::int64_t n);

}  // namespace dagbisect
