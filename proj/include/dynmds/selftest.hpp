#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dynmds {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
};

/// Exhaustive GF(2^8) inverse check, e*A closure over all nonzero e for the
/// three seed fixtures, and determinant oracle agreement.
std::vector<CheckResult> run_selftest(std::uint64_t seed);

}  // namespace dynmds
