#include "josephus/bench.hpp"

#include <algorithm>
#include <span>

#include "josephus/extremal.hpp"
#include "josephus/fixed_point.hpp"
#include "josephus/oracles.hpp"

namespace josephus {

IterationComparison iteration_comparison(const Nat& n) {
    const EvalResult fixed = eval_fixed_point(n);
    const EvalResult extremal = eval_extremal(n);
    if (fixed.j != extremal.j) {
        throw consistency_error("engines disagree at n = " + n.str());
    }

    IterationComparison comparison;
    comparison.extremal_eval_iters = extremal.iterations;
    ExtremalState state = first_extremal_state();
    std::uint64_t fixed_seen = 0;
    for (;;) {
        ++comparison.extremal_iters;
        if (state.f == 1) {
            ++comparison.pure_point_count;
        } else {
            ++fixed_seen;
        }
        if (state.n_e >= fixed.bracket_high) {
            break;
        }
        state = next_extremal_unified(state);
    }
    if (state.n_e != fixed.bracket_high || fixed_seen != fixed.iterations) {
        throw consistency_error("extremal walk missed fixed point " + fixed.bracket_high.str());
    }
    comparison.fixed_point_iters = fixed.iterations;
    return comparison;
}

namespace {

Rational gain_from(std::span<const FixedPointRecord> records, std::uint64_t q) {
    Rational total = 0;
    for (std::uint64_t ell = 1; ell < q; ++ell) {
        const Rational m = records[ell - 1].m_bar;
        total += 1 - Rational(q) / (m + q);
    }
    return total * 100;
}

}  // namespace

Rational gain_r(std::uint64_t q) {
    if (q == 0) {
        throw invalid_input("gain_r needs q >= 1");
    }
    const auto records = enumerate_fixed_points(std::max<std::uint64_t>(q - 1, 1));
    return gain_from(records, q);
}

GainSeries emit_gain_series(std::uint64_t q_max) {
    if (q_max == 0) {
        throw invalid_input("emit_gain_series needs q_max >= 1");
    }
    const auto records = enumerate_fixed_points(q_max);
    GainSeries series;
    series.q_max = q_max;
    std::uint64_t prefix = 0;
    for (std::uint64_t q = 1; q <= q_max; ++q) {
        if (q > 1) {
            prefix += records[q - 2].m_bar;
        }
        series.m_bar_prefix_sums.push_back(prefix);
        series.r_values.push_back(gain_from(records, q));
        series.iteration_gain.push_back((1 - Rational(q) / Rational(q + prefix)) * 100);
    }
    return series;
}

std::vector<GraphRow> emit_function_graph(std::uint64_t limit) {
    if (limit == 0) {
        throw invalid_input("emit_function_graph needs limit >= 1");
    }
    std::vector<GraphRow> rows;
    rows.reserve(limit);
    oracle::euler_sweep(limit, [&](std::uint64_t n, std::uint64_t j) {
        rows.push_back(GraphRow{n, j, classify_point(n, j)});
        return true;
    });
    return rows;
}

}  // namespace josephus
