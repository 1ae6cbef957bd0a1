#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "josephus/core.hpp"

namespace josephus {

struct Mismatch {
    std::uint64_t n = 0;
    std::string detail;
};

struct VerifyReport {
    std::uint64_t checked = 0;
    std::uint64_t simulated = 0;
    std::vector<Mismatch> mismatches;  // sorted by n
};

/// Cross-checks the fixed point engine, the extremal engine and the linear
/// oracle for n = 1..limit, plus the elimination simulation for
/// n <= simulate_limit.
VerifyReport verify_range(std::uint64_t limit, std::uint64_t simulate_limit);

}  // namespace josephus
