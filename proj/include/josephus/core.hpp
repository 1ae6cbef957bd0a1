#pragma once

#include <cstdint>
#include <string_view>

#include "josephus/nat.hpp"

namespace josephus {

/// A high extremal point n_e (J3(n_e) in {n_e - 1, n_e}) with its
/// bookkeeping bits. `f` is 0 for a fixed point and 1 for a pure point;
/// `r` is the parity of `n_e`.
struct ExtremalState {
    std::uint64_t index = 1;
    Nat n_e = 1;
    unsigned f = 0;
    unsigned r = 1;
    Nat j_value = 1;

    bool operator==(const ExtremalState&) const = default;
};

/// Throws consistency_error unless f = n_e - j_value, f in {0,1} and
/// r = n_e mod 2.
void check_state(const ExtremalState& state);

/// One row of the fixed point table: n_p^(ell) and the number of pure high
/// extremal points strictly between it and the next fixed point.
struct FixedPointRecord {
    std::uint64_t ell = 1;
    Nat n_p = 1;
    unsigned m_bar = 0;

    bool operator==(const FixedPointRecord&) const = default;
};

enum class PointClass { fixed, pure_high, low, interior };

std::string_view to_string(PointClass tag);

enum class Algorithm { simulate, euler, extremal, fixed_point };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

/// Outcome of one J3 evaluation. Bracket and segment fields are only
/// meaningful for the recurrence engines and are zero otherwise.
struct EvalResult {
    Nat n;
    Nat j;
    Algorithm algorithm = Algorithm::fixed_point;
    Nat bracket_low;
    Nat bracket_high;
    unsigned frak_m = 0;
    unsigned m_bar = 0;
    std::uint64_t iterations = 0;
};

/// Largest v with 2^v | x. Throws std::domain_error for x = 0.
unsigned two_adic_valuation(const Nat& x);

/// Classifies n given j = J3(n). FIXED wins over LOW for n in {1, 2} and
/// PURE_HIGH wins over LOW for n = 3.
PointClass classify_point(const Nat& n, const Nat& j);

}  // namespace josephus
