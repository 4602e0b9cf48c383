#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eub {

struct VerifyItem {
    std::string name;
    bool pass = false;
    bool advisory = false;  // reported, never fails the suite
    std::string detail;     // counterexample dump or summary
};

struct VerifyResult {
    std::vector<VerifyItem> items;
    bool all_pass() const;
};

// Runs the full cross-module property suite with deterministic seeding.
VerifyResult run_verify(std::uint64_t seed);

}  // namespace eub
