#include "josephus/core.hpp"

#include <boost/multiprecision/integer.hpp>

namespace josephus {

void check_state(const ExtremalState& state) {
    if (state.f > 1 || state.r > 1) {
        throw consistency_error("extremal state bits out of range at n_e = " + state.n_e.str());
    }
    if (state.n_e - state.j_value != state.f) {
        throw consistency_error("f != n_e - J3(n_e) at n_e = " + state.n_e.str());
    }
    if (static_cast<unsigned>(bit_test(state.n_e, 0)) != state.r) {
        throw consistency_error("r != n_e mod 2 at n_e = " + state.n_e.str());
    }
}

std::string_view to_string(PointClass tag) {
    switch (tag) {
        case PointClass::fixed: return "FIXED";
        case PointClass::pure_high: return "PURE_HIGH";
        case PointClass::low: return "LOW";
        case PointClass::interior: return "INTERIOR";
    }
    return "INTERIOR";
}

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::simulate: return "simulate";
        case Algorithm::euler: return "euler";
        case Algorithm::extremal: return "extremal";
        case Algorithm::fixed_point: return "fixed-point";
    }
    return "fixed-point";
}

Algorithm parse_algorithm(std::string_view name) {
    for (auto candidate : {Algorithm::simulate, Algorithm::euler, Algorithm::extremal,
                           Algorithm::fixed_point}) {
        if (to_string(candidate) == name) {
            return candidate;
        }
    }
    throw invalid_input("unknown algorithm '" + std::string(name) + "'");
}

unsigned two_adic_valuation(const Nat& x) {
    if (x <= 0) {
        throw std::domain_error("2-adic valuation of " + x.str() + " is undefined");
    }
    return boost::multiprecision::lsb(x);
}

PointClass classify_point(const Nat& n, const Nat& j) {
    if (j < 1 || j > n) {
        throw invalid_input("J3 value " + j.str() + " outside [1, " + n.str() + "]");
    }
    if (j == n) {
        return PointClass::fixed;
    }
    if (j == n - 1) {
        return PointClass::pure_high;
    }
    if (j <= 2) {
        return PointClass::low;
    }
    return PointClass::interior;
}

}  // namespace josephus
