#pragma once

#include <cstdint>
#include <vector>

#include "josephus/core.hpp"

namespace josephus {

/// Work done by each algorithm to reach the same stopping point, the fixed
/// point n_p^(ell+1) bracketing n. `extremal_eval_iters` is the shorter walk
/// eval_extremal takes when it may stop at a pure point >= n.
struct IterationComparison {
    std::uint64_t fixed_point_iters = 0;
    std::uint64_t extremal_iters = 0;
    std::uint64_t pure_point_count = 0;
    std::uint64_t extremal_eval_iters = 0;
};

IterationComparison iteration_comparison(const Nat& n);

/// sum_{ell=1}^{q-1} (1 - q / (m_bar_ell + q)) * 100, exactly.
Rational gain_r(std::uint64_t q);

struct GainSeries {
    std::uint64_t q_max = 0;
    std::vector<Rational> r_values;            // r(q), percent, q = 1..q_max
    std::vector<std::uint64_t> m_bar_prefix_sums;  // sum_{ell < q} m_bar_ell
    std::vector<Rational> iteration_gain;      // (1 - q / (q + prefix)) * 100
};

GainSeries emit_gain_series(std::uint64_t q_max);

struct GraphRow {
    std::uint64_t n = 0;
    std::uint64_t j = 0;
    PointClass tag = PointClass::interior;
};

/// (n, J3(n), class) for n = 1..limit using the linear oracle.
std::vector<GraphRow> emit_function_graph(std::uint64_t limit);

}  // namespace josephus
