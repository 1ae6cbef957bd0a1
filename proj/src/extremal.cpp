#include "josephus/extremal.hpp"

#include <boost/multiprecision/integer.hpp>

namespace josephus {

namespace {

unsigned parity(const Nat& value) {
    return bit_test(value, 0) ? 1U : 0U;
}

ExtremalState finish(std::uint64_t index, Nat n_e, unsigned f) {
    ExtremalState next;
    next.index = index;
    next.r = parity(n_e);
    next.j_value = n_e - f;
    next.n_e = std::move(n_e);
    next.f = f;
    return next;
}

}  // namespace

ExtremalState first_extremal_state() {
    return ExtremalState{};
}

ExtremalState next_extremal_cases(const ExtremalState& state) {
    check_state(state);
    const Nat three_n = 3 * state.n_e;
    if (state.f == 1 && state.r == 0) {
        return finish(state.index + 1, exact_div(three_n + 2, 2, "case (i)"), 0);
    }
    if (state.f == 1 && state.r == 1) {
        return finish(state.index + 1, exact_div(three_n + 1, 2, "case (ii)"), 1);
    }
    if (state.f == 0 && state.r == 0) {
        return finish(state.index + 1, exact_div(three_n, 2, "case (iii)"), 1);
    }
    return finish(state.index + 1, exact_div(three_n + 1, 2, "case (iv)"), 0);
}

ExtremalState next_extremal_unified(const ExtremalState& state) {
    check_state(state);
    const int f = static_cast<int>(state.f);
    const int r = static_cast<int>(state.r);
    const int sign = 2 * f - 1;
    const Nat three_n = 3 * state.n_e;

    ExtremalState next;
    next.index = state.index + 1;
    next.n_e = exact_div(three_n + 1 + (1 - r) * sign, 2, "n_e recurrence");
    next.j_value = exact_div(three_n + (2 - 3 * r) * sign, 2, "J3 recurrence");
    next.f = static_cast<unsigned>(f - (1 - r) * sign);

    // Auxiliary parity, used only for this step.
    const int s = static_cast<int>(parity(exact_div(three_n + 2 - r, 2, "parity recurrence")));
    next.r = static_cast<unsigned>(s - (1 - r) * (1 - f) * (2 * s - 1));

    check_state(next);
    return next;
}

std::vector<ExtremalState> enumerate_extremal(const Nat& limit) {
    if (limit < 1) {
        throw invalid_input("enumerate_extremal needs limit >= 1, got " + limit.str());
    }
    std::vector<ExtremalState> states{first_extremal_state()};
    while (states.back().n_e <= limit) {
        states.push_back(next_extremal_unified(states.back()));
    }
    return states;
}

EvalResult eval_extremal(const Nat& n) {
    if (n < 1) {
        throw invalid_input("eval_extremal needs n >= 1, got " + n.str());
    }
    ExtremalState previous = first_extremal_state();
    ExtremalState current = previous;
    while (current.n_e < n) {
        previous = current;
        current = next_extremal_unified(current);
    }

    EvalResult result;
    result.n = n;
    result.algorithm = Algorithm::extremal;
    // Slope-3 segment ending at the bracketing extremal point.
    result.j = 3 * (n - current.n_e) + current.j_value;
    result.bracket_low = previous.n_e;
    result.bracket_high = current.n_e;
    result.iterations = current.index;
    if (result.j < 1 || result.j > n) {
        throw consistency_error("extremal extrapolation left [1, n] at n = " + n.str());
    }
    return result;
}

}  // namespace josephus
