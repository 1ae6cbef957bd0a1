#include "doctest.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "josephus/extremal.hpp"
#include "josephus/fixed_point.hpp"
#include "josephus/oracles.hpp"
#include "support/test_oracles.hpp"

using namespace josephus;

namespace {

// Table 1 as printed: (n_p, m_bar) for ell = 1..39.
std::vector<FixedPointRecord> table_one() {
    std::ifstream in(JOSEPHUS_GOLDEN_DIR "/table1.csv");
    std::string line;
    std::getline(in, line);
    std::vector<FixedPointRecord> rows;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string ell, n_p, m;
        std::getline(fields, ell, ',');
        std::getline(fields, n_p, ',');
        std::getline(fields, m, ',');
        rows.push_back({std::stoull(ell), parse_nat(n_p), static_cast<unsigned>(std::stoul(m))});
    }
    return rows;
}

}  // namespace

TEST_CASE("m_bar examples") {
    CHECK(m_bar(2) == 3);
    CHECK(m_bar(13) == 0);
    CHECK(m_bar(3986218) == 7);
    CHECK_THROWS_AS(m_bar(0), invalid_input);
}

TEST_CASE("next_fixed_point examples") {
    CHECK(next_fixed_point(1) == 2);
    CHECK(next_fixed_point(2) == 13);
    CHECK(next_fixed_point(3986218) == 102162424);
}

TEST_CASE("enumerate_fixed_points reproduces the printed table") {
    const auto golden = table_one();
    REQUIRE(golden.size() == 39);
    CHECK(enumerate_fixed_points(39) == golden);

    const auto five = enumerate_fixed_points(5);
    std::vector<Nat> ns;
    std::vector<unsigned> ms;
    for (const auto& r : five) {
        ns.push_back(r.n_p);
        ms.push_back(r.m_bar);
    }
    CHECK(ns == std::vector<Nat>{1, 2, 13, 20, 46});
    CHECK(ms == std::vector<unsigned>{0, 3, 0, 1, 2});
    CHECK(enumerate_fixed_points(1) == std::vector<FixedPointRecord>{{1, 1, 0}});
    CHECK(enumerate_fixed_points(39).back().n_p == Nat(99173125486415ULL));
    CHECK_THROWS_AS(enumerate_fixed_points(0), invalid_input);
}

TEST_CASE("fixed points agree with the oracle scan") {
    const auto scanned = oracle::scan_extremal_points(2'000'000);
    std::vector<Nat> oracle_fixed;
    for (const auto& s : scanned) {
        if (s.f == 0) {
            oracle_fixed.push_back(s.n_e);
        }
    }
    std::vector<Nat> generated;
    for (const auto& r : enumerate_fixed_points(oracle_fixed.size())) {
        generated.push_back(r.n_p);
    }
    CHECK(generated == oracle_fixed);
}

TEST_CASE("frak_m examples") {
    CHECK(frak_m(50000000, 3986218) == 6);
    CHECK(frak_m(13, 2) == 3);
    CHECK(frak_m(3, 2) == 0);
    CHECK_THROWS_AS(frak_m(2, 2), invalid_input);
    CHECK_THROWS_AS(frak_m(14, 2), invalid_input);
    CHECK_THROWS_AS(frak_m(5, 0), invalid_input);
}

TEST_CASE("frak_m at the bracket ends") {
    const auto records = enumerate_fixed_points(40);
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        const auto& low = records[i];
        CHECK(frak_m(records[i + 1].n_p, low.n_p) == low.m_bar);
        CHECK(frak_m(low.n_p + 1, low.n_p) == 0);
    }
}

TEST_CASE("frak_m matches the floating-point ceiling away from boundaries") {
    const auto records = enumerate_fixed_points(30);  // n_p below 2^50
    for (const auto n : testing::random_points(2000, 200'000'000'000ULL, 0xF10A7)) {
        std::size_t i = 0;
        while (records[i + 1].n_p < n) {
            ++i;
        }
        const double np = records[i].n_p.convert_to<double>();
        const double x = std::log((2.0 * n + 1) / (3 * np + 2)) / std::log(1.5);
        if (std::abs(x - std::round(x)) < 1e-9) {
            continue;
        }
        CHECK(frak_m(n, records[i].n_p) == testing::float_frak_m(double(n), np));
    }
}

TEST_CASE("eval_fixed_point examples") {
    const auto remark = eval_fixed_point(50000000);
    CHECK(remark.j == 13783435);
    CHECK(remark.bracket_low == 3986218);
    CHECK(remark.bracket_high == 102162424);
    CHECK(remark.m_bar == 7);
    CHECK(remark.frak_m == 6);
    CHECK(remark.iterations == 18);
    CHECK(remark.algorithm == Algorithm::fixed_point);

    CHECK(eval_fixed_point(46).j == 46);
    CHECK(eval_fixed_point(46).bracket_high == 46);
    CHECK(eval_fixed_point(4).j == 1);
    CHECK(eval_fixed_point(1).j == 1);
    CHECK(eval_fixed_point(2).j == 2);
    CHECK_THROWS_AS(eval_fixed_point(0), invalid_input);
}

TEST_CASE("verify_fixed_point examples") {
    CHECK(verify_fixed_point(13));
    CHECK_FALSE(verify_fixed_point(14));
    CHECK(verify_fixed_point(1181101));
    CHECK(verify_fixed_point(1));
    CHECK_FALSE(verify_fixed_point(0));
}

TEST_CASE("m_bar_via_log examples and agreement") {
    CHECK(m_bar_via_log(2, 13) == 3);
    CHECK(m_bar_via_log(1, 2) == 0);
    CHECK(m_bar_via_log(3986218, 102162424) == 7);
    CHECK_THROWS_AS(m_bar_via_log(13, 13), invalid_input);
    const auto records = enumerate_fixed_points(200);
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        CHECK(m_bar_via_log(records[i].n_p, records[i + 1].n_p) == records[i].m_bar);
    }
}

TEST_CASE("extremal stepping between fixed points takes m_bar + 1 steps") {
    const auto records = enumerate_fixed_points(61);
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        const Nat& n_p = records[i].n_p;
        ExtremalState s{1, n_p, 0, static_cast<unsigned>(n_p % 2), n_p};
        unsigned steps = 0;
        do {
            s = next_extremal_unified(s);
            ++steps;
            if (s.n_e < records[i + 1].n_p) {
                CHECK(s.f == 1);
            }
        } while (s.n_e < records[i + 1].n_p);
        CHECK(s.n_e == records[i + 1].n_p);
        CHECK(s.f == 0);
        CHECK(steps == records[i].m_bar + 1);
    }
}

TEST_CASE("fixed points evaluate to themselves") {
    for (const auto& r : enumerate_fixed_points(120)) {
        CHECK(eval_fixed_point(r.n_p).j == r.n_p);
    }
}

TEST_CASE("eval_fixed_point agrees with euler exhaustively to 10^5") {
    std::uint64_t mismatches = 0;
    oracle::euler_sweep(100'000, [&](std::uint64_t n, std::uint64_t j) {
        const auto r = eval_fixed_point(n);
        mismatches += r.j != j;
        if (n > 1) {
            CHECK(r.bracket_low < n);
            CHECK(r.bracket_high >= n);
        }
        return true;
    });
    CHECK(mismatches == 0);
}

TEST_CASE("eval_fixed_point agrees with euler on random n up to 10^8") {
    const auto points = testing::random_points(1000, 100'000'000, 0xF1C5);
    const auto expected = testing::euler_at(points);
    std::uint64_t mismatches = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        mismatches += eval_fixed_point(points[i]).j != expected[i];
    }
    CHECK(mismatches == 0);
}

TEST_CASE("integer form equals the literal (2/3)-power form") {
    for (const auto n : testing::random_points(1000, 1'000'000'000'000ULL, 0x9)) {
        const auto r = eval_fixed_point(n);
        CHECK(r.frak_m <= r.m_bar);
        const Nat scaled = pow3(r.frak_m) * (3 * r.bracket_low + 2);
        CHECK(scaled % pow2(r.frak_m) == 0);
        const Rational literal =
            testing::literal_fixed_point_form(n, r.bracket_high, r.m_bar, r.frak_m);
        CHECK(literal == Rational(r.j));
    }
}

TEST_CASE("engines agree far beyond machine words") {
    const auto records = enumerate_fixed_points(160);
    const Nat& top = records.back().n_p;
    CHECK(top > pow2(64));
    for (const Nat& n : std::vector<Nat>{top - 1, top, top / 3 * 2 + 7, records[150].n_p + 1}) {
        CHECK(eval_fixed_point(n).j == eval_extremal(n).j);
    }
}

TEST_CASE("cached and uncached evaluation agree, including concurrent readers") {
    FixedPointCache cache;
    const auto points = testing::random_points(400, 1'000'000'000'000ULL, 0xCAC4E);
    std::vector<std::thread> workers;
    std::vector<int> mismatches(4, 0);
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = t; i < points.size(); i += 4) {
                const auto a = eval_fixed_point(points[i]);
                const auto b = eval_fixed_point(points[i], &cache);
                mismatches[t] += a.j != b.j || a.iterations != b.iterations ||
                                 a.bracket_low != b.bracket_low || a.frak_m != b.frak_m;
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    CHECK(mismatches == std::vector<int>(4, 0));
    CHECK(cache.record(0) == FixedPointRecord{1, 1, 0});
    CHECK(cache.size() >= 2);
}
