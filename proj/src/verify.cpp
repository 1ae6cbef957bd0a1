#include "josephus/verify.hpp"

#include "josephus/extremal.hpp"
#include "josephus/fixed_point.hpp"
#include "josephus/oracles.hpp"

namespace josephus {

VerifyReport verify_range(std::uint64_t limit, std::uint64_t simulate_limit) {
    if (limit == 0) {
        throw invalid_input("verify needs limit >= 1");
    }
    VerifyReport report;
    FixedPointCache cache;
    oracle::euler_sweep(limit, [&](std::uint64_t n, std::uint64_t expected) {
        const Nat big_n = n;
        const Nat fixed = eval_fixed_point(big_n, &cache).j;
        const Nat extremal = eval_extremal(big_n).j;
        std::string detail;
        if (fixed != expected || extremal != expected) {
            detail = "euler=" + std::to_string(expected) + " fixed-point=" + fixed.str() +
                     " extremal=" + extremal.str();
        }
        if (n <= simulate_limit) {
            const Nat survivor = oracle::simulate(big_n, simulate_limit).survivor;
            if (survivor != expected) {
                detail += (detail.empty() ? "" : " ") + std::string("simulate=") + survivor.str() +
                          " euler=" + std::to_string(expected);
            }
            ++report.simulated;
        }
        if (!detail.empty()) {
            report.mismatches.push_back(Mismatch{n, std::move(detail)});
        }
        ++report.checked;
        return true;
    });
    return report;
}

}  // namespace josephus
