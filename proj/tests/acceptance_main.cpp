// Acceptance suite: runs every claim and prints one PASS/FAIL line each.
// Exit code 0 iff all claims hold.

#include <chrono>
#include <cstdio>

#include "dagbisect/claims.hpp"

int main() {
    using Clock = std::chrono::steady_clock;
    bool all_pass = true;
    int index = 0;
    for (const auto& name : dagbisect::claims::claim_names()) {
        auto start = Clock::now();
        auto result = dagbisect::claims::run_claim(name);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        std::printf("[%s] %2d %-22s (%6lld ms)  %s\n", result.pass ? "PASS" : "FAIL", ++index,
                    result.name.c_str(), static_cast<long long>(ms.count()),
                    result.details.c_str());
        std::fflush(stdout);
        all_pass = all_pass && result.pass;
    }
    return all_pass ? 0 : 1;
}
