#include "josephus/oracles.hpp"

#include <bit>
#include <string>

namespace josephus::oracle {

namespace {

// Order-statistic tree over positions 1..n, each initially present.
class PresenceTree {
public:
    explicit PresenceTree(std::size_t size) : tree_(size + 1, 0) {
        for (std::size_t i = 1; i <= size; ++i) {
            tree_[i] += 1;
            std::size_t parent = i + (i & (~i + 1));
            if (parent <= size) {
                tree_[parent] += tree_[i];
            }
        }
    }

    void remove(std::size_t position) {
        for (std::size_t i = position; i < tree_.size(); i += i & (~i + 1)) {
            tree_[i] -= 1;
        }
    }

    // Position of the k-th (1-based) present element.
    std::size_t kth(std::uint64_t k) const {
        std::size_t position = 0;
        for (std::size_t step = std::bit_floor(tree_.size() - 1); step != 0; step >>= 1) {
            std::size_t next = position + step;
            if (next < tree_.size() && tree_[next] < k) {
                position = next;
                k -= tree_[next];
            }
        }
        return position + 1;
    }

private:
    std::vector<std::uint64_t> tree_;
};

}  // namespace

SimulationTrace simulate(const Nat& n, std::uint64_t cap) {
    if (n < 1) {
        throw invalid_input("simulate needs n >= 1, got " + n.str());
    }
    if (n > cap) {
        throw capacity_error("simulate is capped at n <= " + std::to_string(cap) + ", got " +
                             n.str());
    }
    const auto size = n.convert_to<std::uint64_t>();

    SimulationTrace trace;
    trace.n = n;
    trace.elimination_order.reserve(size - 1);

    PresenceTree alive(size);
    std::uint64_t remaining = size;
    std::uint64_t cursor = 0;  // 0-based rank of the person who counts "1"
    while (remaining > 1) {
        cursor = (cursor + 2) % remaining;
        const std::size_t victim = alive.kth(cursor + 1);
        alive.remove(victim);
        trace.elimination_order.push_back(victim);
        --remaining;
        if (cursor == remaining) {
            cursor = 0;
        }
    }
    trace.survivor = alive.kth(1);
    return trace;
}

void euler_sweep(std::uint64_t limit,
                 const std::function<bool(std::uint64_t, std::uint64_t)>& visit) {
    std::uint64_t j = 1;
    for (std::uint64_t m = 1; m <= limit; ++m) {
        if (m > 1) {
            // J(m-1) <= m-1, so the "mod m" is at most one subtraction.
            j += 3;
            if (j > m) {
                j -= m;
            }
        }
        if (!visit(m, j)) {
            return;
        }
    }
}

Nat euler_eval(const Nat& n) {
    if (n < 1) {
        throw invalid_input("euler_eval needs n >= 1, got " + n.str());
    }
    const std::uint64_t target = to_u64(n, "euler_eval");
    std::uint64_t result = 0;
    euler_sweep(target, [&](std::uint64_t m, std::uint64_t j) {
        if (m == target) {
            result = j;
        }
        return true;
    });
    return result;
}

std::vector<ExtremalState> scan_extremal_points(const Nat& limit) {
    if (limit < 1) {
        throw invalid_input("scan_extremal_points needs limit >= 1, got " + limit.str());
    }
    std::vector<ExtremalState> states;
    euler_sweep(to_u64(limit, "scan_extremal_points"), [&](std::uint64_t m, std::uint64_t j) {
        if (j + 1 >= m) {
            ExtremalState state;
            state.index = states.size() + 1;
            state.n_e = m;
            state.f = static_cast<unsigned>(m - j);
            state.r = static_cast<unsigned>(m % 2);
            state.j_value = j;
            states.push_back(std::move(state));
        }
        return true;
    });
    return states;
}

}  // namespace josephus::oracle
