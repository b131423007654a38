#include "doctest.h"

#include <cmath>
#include <initializer_list>

#include "dagbisect/exactmath.hpp"

using namespace dagbisect;

namespace {

// High-precision floating oracle. The integer thresholds never coincide with
// the irrational bounds, and for the ranges tested the gap is far above long
// double error, so direct comparison is a valid reference.
const long double kPhi = (1.0L + std::sqrt(5.0L)) / 2.0L;

}  // namespace

TEST_SUITE("exactmath") {

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(1024) == 10);
    CHECK(ceil_log2(1025) == 11);
}

TEST_CASE("golden threshold pinned values") {
    CHECK_FALSE(golden_threshold(21, 8));  // 8 < 21/phi^2 ~ 8.02
    CHECK(golden_threshold(13, 5));        // 5 > 13/phi^2 ~ 4.97
    CHECK(golden_threshold(2, 1));
}

TEST_CASE("golden threshold matches the floating oracle") {
    for (std::int64_t n = 1; n <= 2000; ++n) {
        long double bound = static_cast<long double>(n) / (kPhi * kPhi);
        for (std::int64_t s = 0; 2 * s <= n; ++s)
            CHECK(golden_threshold(n, s) == (static_cast<long double>(s) >= bound));
    }
}

TEST_CASE("phi quotients match the floating oracle") {
    for (std::int64_t n = 1; n <= 500; ++n) {
        for (std::int64_t m = 0; m <= n; ++m) {
            CHECK(le_n_over_phi(m, n) == (static_cast<long double>(m) <= n / kPhi));
            CHECK(le_n_over_phi2(m, n) == (static_cast<long double>(m) <= n / (kPhi * kPhi)));
        }
    }
}

TEST_CASE("ceil_log_phi") {
    CHECK(ceil_log_phi(1) == 0);
    CHECK(ceil_log_phi(2) == 2);   // phi^1 ~ 1.618 < 2, phi^2 ~ 2.618
    CHECK(ceil_log_phi(4) == 3);   // phi^3 ~ 4.236
    for (std::int64_t m = 1; m <= 1000000; m = m * 3 + 1) {
        int t = ceil_log_phi(m);
        CHECK(std::pow(static_cast<long double>(kPhi), t) >= m);
        if (t > 0) CHECK(std::pow(static_cast<long double>(kPhi), t - 1) < m);
    }
}

TEST_CASE("logarithmic bound predicates match the floating oracle") {
    for (int n : {1, 2, 3, 5, 13, 21, 100, 300}) {
        for (int q = 0; q <= 40; ++q) {
            for (int delta : {2, 3, 4}) {
                long double bound =
                    std::log2(static_cast<long double>(n)) /
                    std::log2(static_cast<long double>(delta + 1) / delta);
                CHECK(within_ratio_log_bound(q, n, delta) ==
                      (static_cast<long double>(q) <= bound + 1e-12L));
            }
            long double golden_bound =
                std::log2(static_cast<long double>(n)) / std::log2(kPhi) + 1.0L;
            CHECK(within_golden_log_bound(q, n) ==
                  (static_cast<long double>(q) <= golden_bound + 1e-12L));
        }
    }
}

}  // TEST_SUITE
