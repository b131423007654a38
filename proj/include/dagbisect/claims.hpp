#pragma once

#include <string>
#include <vector>

// The verification harness: each claim is one of the library's headline
// guarantees turned into a deterministic, self-contained check. The CLI
// `verify` subcommand and the acceptance test suite both run these.

namespace dagbisect::claims {

struct ClaimResult {
    std::string name;
    bool pass = false;
    std::string details;
};

const std::vector<std::string>& claim_names();

/// Runs one claim by name. Throws ValidationError for an unknown name.
ClaimResult run_claim(const std::string& name);

std::vector<ClaimResult> run_all();

}  // namespace dagbisect::claims
