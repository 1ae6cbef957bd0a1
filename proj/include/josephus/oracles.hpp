#pragma once

// Brute-force references for J3. They share no code with the recurrence
// engines and run on machine words, so they are only used at desk scale.

#include <cstdint>
#include <functional>
#include <vector>

#include "josephus/core.hpp"

namespace josephus::oracle {

inline constexpr std::uint64_t default_simulate_cap = 1'000'000;

struct SimulationTrace {
    Nat n;
    std::vector<std::uint64_t> elimination_order;  // 1-based positions
    Nat survivor;
};

/// Runs the elimination process on n people with every third removed,
/// counting from position 1. Throws invalid_input for n = 0 and
/// capacity_error above `cap`.
SimulationTrace simulate(const Nat& n, std::uint64_t cap = default_simulate_cap);

/// J3(n) by the linear recurrence J(m) = ((J(m-1) + 2) mod m) + 1.
Nat euler_eval(const Nat& n);

/// Streams (n, J3(n)) for n = 1..limit through `visit`. Stops early when
/// `visit` returns false.
void euler_sweep(std::uint64_t limit,
                 const std::function<bool(std::uint64_t, std::uint64_t)>& visit);

/// Every n <= limit with J3(n) in {n-1, n}, found by exhaustive scan.
std::vector<ExtremalState> scan_extremal_points(const Nat& limit);

}  // namespace josephus::oracle
