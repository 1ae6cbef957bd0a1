#include "josephus/nat.hpp"

#include <limits>

namespace josephus {

Nat parse_nat(std::string_view text) {
    if (text.empty()) {
        throw invalid_input("expected a decimal integer, got an empty string");
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw invalid_input("expected a decimal integer, got '" + std::string(text) + "'");
        }
    }
    return Nat(std::string(text));
}

std::string to_string(const Nat& value) {
    return value.str();
}

Nat exact_div(const Nat& numerator, const Nat& denominator, std::string_view what) {
    Nat quotient;
    Nat remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw consistency_error("non-exact division in " + std::string(what) + ": " +
                                numerator.str() + " / " + denominator.str());
    }
    return quotient;
}

Nat pow2(unsigned exponent) {
    Nat result = 1;
    return result << exponent;
}

Nat pow3(unsigned exponent) {
    return boost::multiprecision::pow(Nat(3), exponent);
}

std::uint64_t to_u64(const Nat& value, std::string_view what) {
    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
        throw capacity_error(std::string(what) + ": " + value.str() +
                             " does not fit in 64 bits");
    }
    return value.convert_to<std::uint64_t>();
}

}  // namespace josephus
