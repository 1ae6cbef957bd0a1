#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace josephus {

/// Exact non-negative integer used for every position, count and J3 value.
using Nat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Bad caller input (zero where a positive value is required, out-of-range
/// arguments, malformed decimal strings).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request exceeds a documented implementation cap.
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An engine invariant broke, e.g. a recurrence division was not exact.
/// Seeing this means a bug or a violated precondition, never rounding.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Parses an unsigned decimal string of any length. Rejects signs, spaces,
/// empty input and anything that is not a digit.
Nat parse_nat(std::string_view text);

std::string to_string(const Nat& value);

/// `numerator / denominator`, throwing consistency_error unless exact.
Nat exact_div(const Nat& numerator, const Nat& denominator, std::string_view what);

Nat pow2(unsigned exponent);
Nat pow3(unsigned exponent);

/// Narrowing to a machine word for the oracles; throws capacity_error.
std::uint64_t to_u64(const Nat& value, std::string_view what);

}  // namespace josephus
