#include "josephus/fixed_point.hpp"

#include <algorithm>
#include <mutex>

namespace josephus {

namespace {

// Least m with 2^m * numerator <= 3^m * denominator.
unsigned ceil_log_three_halves(Nat numerator, Nat denominator) {
    unsigned m = 0;
    while (numerator > denominator) {
        numerator <<= 1;
        denominator *= 3;
        ++m;
    }
    return m;
}

struct Bracket {
    FixedPointRecord low;
    FixedPointRecord high;
};

Bracket find_bracket(const Nat& n) {
    FixedPointRecord low{1, 1, m_bar(1)};
    FixedPointRecord high{2, next_fixed_point(1), 0};
    high.m_bar = m_bar(high.n_p);
    while (high.n_p < n) {
        low = high;
        high = FixedPointRecord{low.ell + 1, next_fixed_point(low.n_p), 0};
        high.m_bar = m_bar(high.n_p);
    }
    return {std::move(low), std::move(high)};
}

Bracket find_bracket(const Nat& n, FixedPointCache& cache) {
    const std::size_t upper = cache.upper_bracket(n);
    return {cache.record(upper - 1), cache.record(upper)};
}

}  // namespace

unsigned m_bar(const Nat& n_p) {
    if (n_p < 1) {
        throw invalid_input("m_bar needs a positive fixed point, got " + n_p.str());
    }
    return two_adic_valuation(3 * n_p + 2);
}

Nat next_fixed_point(const Nat& n_p) {
    const unsigned m = m_bar(n_p);
    return exact_div(pow3(m) * (3 * n_p + 2) - pow2(m), pow2(m + 1), "fixed point recurrence");
}

std::vector<FixedPointRecord> enumerate_fixed_points(std::size_t count) {
    if (count == 0) {
        throw invalid_input("enumerate_fixed_points needs count >= 1");
    }
    std::vector<FixedPointRecord> records;
    records.reserve(count);
    Nat n_p = 1;
    for (std::size_t ell = 1; ell <= count; ++ell) {
        const unsigned m = m_bar(n_p);
        records.push_back(FixedPointRecord{ell, n_p, m});
        if (ell < count) {
            n_p = next_fixed_point(n_p);
        }
    }
    return records;
}

unsigned frak_m(const Nat& n, const Nat& n_p) {
    if (n_p < 1) {
        throw invalid_input("frak_m needs a positive fixed point, got " + n_p.str());
    }
    if (n < n_p + 1 || n > next_fixed_point(n_p)) {
        throw invalid_input("n = " + n.str() + " is outside the bracket above n_p = " + n_p.str());
    }
    return ceil_log_three_halves(2 * n + 1, 3 * n_p + 2);
}

unsigned m_bar_via_log(const Nat& n_p, const Nat& n_p_next) {
    if (n_p < 1 || n_p_next <= n_p) {
        throw invalid_input("m_bar_via_log needs 1 <= n_p < n_p_next, got " + n_p.str() + ", " +
                            n_p_next.str());
    }
    return ceil_log_three_halves(2 * n_p_next + 1, 3 * n_p + 2);
}

bool verify_fixed_point(const Nat& n) {
    if (n < 1) {
        return false;
    }
    Nat n_p = 1;
    while (n_p < n) {
        n_p = next_fixed_point(n_p);
    }
    return n_p == n;
}

FixedPointCache::FixedPointCache() : records_{FixedPointRecord{1, 1, m_bar(1)}} {}

std::size_t FixedPointCache::upper_bracket(const Nat& n) {
    const auto search = [&] {
        auto it = std::lower_bound(records_.begin(), records_.end(), n,
                                   [](const FixedPointRecord& r, const Nat& v) { return r.n_p < v; });
        return static_cast<std::size_t>(it - records_.begin());
    };
    {
        std::shared_lock lock(mutex_);
        if (records_.back().n_p >= n && records_.size() > 1) {
            return std::max<std::size_t>(search(), 1);
        }
    }
    std::unique_lock lock(mutex_);
    while (records_.back().n_p < n || records_.size() < 2) {
        const FixedPointRecord& last = records_.back();
        Nat next = next_fixed_point(last.n_p);
        const unsigned m = m_bar(next);
        records_.push_back(FixedPointRecord{last.ell + 1, std::move(next), m});
    }
    return std::max<std::size_t>(search(), 1);
}

FixedPointRecord FixedPointCache::record(std::size_t position) const {
    std::shared_lock lock(mutex_);
    return records_.at(position);
}

std::size_t FixedPointCache::size() const {
    std::shared_lock lock(mutex_);
    return records_.size();
}

FixedPointCache& shared_fixed_point_cache() {
    static FixedPointCache cache;
    return cache;
}

EvalResult eval_fixed_point(const Nat& n, FixedPointCache* cache) {
    if (n < 1) {
        throw invalid_input("eval_fixed_point needs n >= 1, got " + n.str());
    }
    EvalResult result;
    result.n = n;
    result.algorithm = Algorithm::fixed_point;

    if (n == 1) {
        result.j = 1;
        result.bracket_low = 1;
        result.bracket_high = 1;
        result.m_bar = m_bar(1);
        result.iterations = 1;
        return result;
    }

    // n lies in [[low + 1, high]]; a fixed point n is the right endpoint.
    const Bracket bracket = cache != nullptr ? find_bracket(n, *cache) : find_bracket(n);
    const Nat& n_p = bracket.low.n_p;
    const unsigned segment = ceil_log_three_halves(2 * n + 1, 3 * n_p + 2);
    if (segment > bracket.low.m_bar) {
        throw consistency_error("segment index exceeds m_bar at n = " + n.str());
    }

    result.j = 3 * n + 1 - exact_div(pow3(segment) * (3 * n_p + 2), pow2(segment),
                                     "fixed point evaluation");
    result.bracket_low = n_p;
    result.bracket_high = bracket.high.n_p;
    result.frak_m = segment;
    result.m_bar = bracket.low.m_bar;
    result.iterations = bracket.high.ell;
    if (result.j < 1 || result.j > n) {
        throw consistency_error("fixed point evaluation left [1, n] at n = " + n.str());
    }
    return result;
}

}  // namespace josephus
