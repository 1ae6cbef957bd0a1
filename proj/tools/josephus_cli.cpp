// josephus: evaluate J3, list fixed and high extremal points, cross-check
// the engines and emit benchmark / plotting data.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
// 3 capacity exceeded, 4 I/O failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "josephus/bench.hpp"
#include "josephus/extremal.hpp"
#include "josephus/fixed_point.hpp"
#include "josephus/format.hpp"
#include "josephus/oracles.hpp"
#include "josephus/verify.hpp"

namespace {

using namespace josephus;

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, capacity = 3, io = 4 };

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string format = "plain";
    std::string output;
};

void add_common(CLI::App* command, CommonOptions& options) {
    command->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
    command->add_option("--output", options.output, "Write to this file instead of stdout");
}

void emit(const CommonOptions& options, const std::string& text) {
    if (options.output.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(options.output, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw io_error("cannot open '" + options.output + "' for writing");
    }
    file << text;
    file.close();
    if (!file) {
        throw io_error("failed writing '" + options.output + "'");
    }
}

Nat positive(const std::string& text, const char* what) {
    Nat value = parse_nat(text);
    if (value < 1) {
        throw invalid_input(std::string(what) + " must be a positive integer");
    }
    return value;
}

EvalResult evaluate(const Nat& n, Algorithm algorithm, std::uint64_t simulate_cap) {
    switch (algorithm) {
        case Algorithm::simulate: {
            EvalResult result;
            result.n = n;
            result.algorithm = algorithm;
            result.j = oracle::simulate(n, simulate_cap).survivor;
            return result;
        }
        case Algorithm::euler: {
            EvalResult result;
            result.n = n;
            result.algorithm = algorithm;
            result.j = oracle::euler_eval(n);
            result.iterations = to_u64(n, "euler");
            return result;
        }
        case Algorithm::extremal:
            return eval_extremal(n);
        case Algorithm::fixed_point:
            return eval_fixed_point(n, &shared_fixed_point_cache());
    }
    throw invalid_input("unknown algorithm");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Josephus function J3 via fixed point recurrences"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    // eval
    CommonOptions eval_options;
    std::string eval_n;
    std::string algorithm_name = "fixed-point";
    std::uint64_t simulate_cap = oracle::default_simulate_cap;
    auto* eval = app.add_subcommand("eval", "Evaluate J3(n)");
    eval->add_option("n", eval_n, "Number of people (any size)")->required();
    eval->add_option("--algorithm", algorithm_name, "Evaluation engine")
        ->check(CLI::IsMember({"simulate", "euler", "extremal", "fixed-point"}))
        ->capture_default_str();
    eval->add_option("--simulate-cap", simulate_cap, "Largest n accepted by the simulation")
        ->capture_default_str();
    add_common(eval, eval_options);

    // fixed-points
    CommonOptions fixed_options;
    std::string fixed_count;
    auto* fixed = app.add_subcommand("fixed-points", "List the first COUNT fixed points");
    fixed->add_option("count", fixed_count, "Number of rows")->required();
    add_common(fixed, fixed_options);

    // extremal-points
    CommonOptions extremal_options;
    std::string extremal_limit;
    auto* extremal = app.add_subcommand("extremal-points", "List high extremal points <= LIMIT");
    extremal->add_option("limit", extremal_limit, "Largest n_e listed")->required();
    add_common(extremal, extremal_options);

    // verify
    CommonOptions verify_options;
    std::string verify_limit = "100000";
    std::uint64_t simulate_limit = 10'000;
    auto* verify = app.add_subcommand("verify", "Cross-check every engine for n = 1..LIMIT");
    verify->add_option("limit", verify_limit, "Largest n checked")->capture_default_str();
    verify->add_option("--simulate-limit", simulate_limit,
                       "Also check the elimination simulation for n up to this value")
        ->capture_default_str();
    add_common(verify, verify_options);

    // bench
    CommonOptions bench_options;
    std::string bench_n;
    bool timing = false;
    auto* bench = app.add_subcommand("bench", "Compare iteration counts of both engines");
    bench->add_option("n", bench_n, "Evaluation point")->required();
    bench->add_flag("--timing", timing, "Append non-normative wall-clock timings (stderr)");
    add_common(bench, bench_options);

    // gain
    CommonOptions gain_options;
    std::uint64_t q_max = 39;
    auto* gain = app.add_subcommand("gain", "Percent gain r(q) for q = 1..Q_MAX");
    gain->add_option("q_max", q_max, "Largest q")->capture_default_str()->check(
        CLI::PositiveNumber);
    add_common(gain, gain_options);

    // graph
    CommonOptions graph_options;
    std::string graph_limit = "50";
    auto* graph = app.add_subcommand("graph", "Rows (n, J3(n), class) for n = 1..LIMIT");
    graph->add_option("limit", graph_limit, "Largest n")->capture_default_str();
    add_common(graph, graph_options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*eval) {
            const Nat n = positive(eval_n, "n");
            const EvalResult result = evaluate(n, parse_algorithm(algorithm_name), simulate_cap);
            emit(eval_options, format_eval(result, parse_format(eval_options.format)));
        } else if (*fixed) {
            const auto count = to_u64(positive(fixed_count, "count"), "count");
            const auto records = enumerate_fixed_points(count);
            emit(fixed_options, format_fixed_points(records, parse_format(fixed_options.format)));
        } else if (*extremal) {
            auto states = enumerate_extremal(positive(extremal_limit, "limit"));
            states.pop_back();  // bracketing point lies beyond the limit
            emit(extremal_options,
                 format_extremal_points(states, parse_format(extremal_options.format)));
        } else if (*verify) {
            const auto limit = to_u64(positive(verify_limit, "limit"), "limit");
            const VerifyReport report = verify_range(limit, simulate_limit);
            std::string text = "checked " + std::to_string(report.checked) + " values (" +
                               std::to_string(report.simulated) + " simulated), " +
                               std::to_string(report.mismatches.size()) + " mismatches\n";
            if (!report.mismatches.empty()) {
                const Mismatch& first = report.mismatches.front();
                text += "first mismatch at n=" + std::to_string(first.n) + ": " + first.detail +
                        "\n";
            }
            emit(verify_options, text);
            return report.mismatches.empty() ? ok : mismatch;
        } else if (*bench) {
            const Nat n = positive(bench_n, "n");
            const IterationComparison comparison = iteration_comparison(n);
            emit(bench_options,
                 format_comparison(n, comparison, parse_format(bench_options.format)));
            if (timing) {
                using clock = std::chrono::steady_clock;
                const auto t0 = clock::now();
                (void)eval_fixed_point(n);
                const auto t1 = clock::now();
                (void)eval_extremal(n);
                const auto t2 = clock::now();
                const auto us = [](auto d) {
                    return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
                };
                std::cerr << "timing (non-normative): fixed_point_us=" << us(t1 - t0)
                          << " extremal_us=" << us(t2 - t1) << '\n';
            }
        } else if (*gain) {
            emit(gain_options,
                 format_gain_series(emit_gain_series(q_max), parse_format(gain_options.format)));
        } else if (*graph) {
            const auto limit = to_u64(positive(graph_limit, "limit"), "limit");
            emit(graph_options,
                 format_graph(emit_function_graph(limit), parse_format(graph_options.format)));
        }
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return capacity;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return io;
    }
    return ok;
}
