#pragma once

#include <vector>

#include "josephus/core.hpp"

namespace josephus {

/// Successor of a high extremal point by explicit four-way case split on
/// (f, r).
ExtremalState next_extremal_cases(const ExtremalState& state);

/// Successor of a high extremal point via the closed recurrences for n_e,
/// J3(n_e), f and r. Agrees field-for-field with next_extremal_cases.
ExtremalState next_extremal_unified(const ExtremalState& state);

/// The seed of the high extremal sequence: index 1, n_e = 1, J3 = 1.
ExtremalState first_extremal_state();

/// All high extremal states with n_e <= limit, followed by the first state
/// beyond `limit`.
std::vector<ExtremalState> enumerate_extremal(const Nat& limit);

/// J3(n) by walking high extremal points up to the first n_e >= n and
/// extrapolating back along that segment with slope 3.
EvalResult eval_extremal(const Nat& n);

}  // namespace josephus
