#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "josephus/core.hpp"

namespace josephus {

/// Number of pure high extremal points between n_p and the next fixed
/// point: the 2-adic valuation of 3 n_p + 2.
unsigned m_bar(const Nat& n_p);

/// (3^m (3 n_p + 2) - 2^m) / 2^(m+1) with m = m_bar(n_p).
Nat next_fixed_point(const Nat& n_p);

/// The first `count` rows (ell = 1..count) of the fixed point table.
std::vector<FixedPointRecord> enumerate_fixed_points(std::size_t count);

/// Least m >= 0 with 2^m (2n + 1) <= 3^m (3 n_p + 2). Requires
/// n_p + 1 <= n <= next_fixed_point(n_p).
unsigned frak_m(const Nat& n, const Nat& n_p);

/// m_bar recomputed from two consecutive fixed points as the exact ceiling
/// of log_{3/2}((2 n_p_next + 1) / (3 n_p + 2)).
unsigned m_bar_via_log(const Nat& n_p, const Nat& n_p_next);

bool verify_fixed_point(const Nat& n);

/// Grow-only table of fixed points shared between evaluations. Readers run
/// concurrently; extension takes the writer lock.
class FixedPointCache {
public:
    FixedPointCache();

    /// Index (0-based) of the first record with n_p >= n, extending as needed.
    std::size_t upper_bracket(const Nat& n);
    FixedPointRecord record(std::size_t position) const;
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::vector<FixedPointRecord> records_;
};

/// Process-wide cache used by the CLI.
FixedPointCache& shared_fixed_point_cache();

/// J3(n) from the bracketing fixed points: 3n + 1 - 3^fm (3 n_p + 2) / 2^fm.
/// With a cache the bracket search reuses stored records; the result is the
/// same either way.
EvalResult eval_fixed_point(const Nat& n, FixedPointCache* cache = nullptr);

}  // namespace josephus
