#include "josephus/format.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace josephus {

using ordered_json = nlohmann::ordered_json;

namespace {

// Keeps insertion order and emits a single line per object.
void append_json_line(std::string& out, const ordered_json& object) {
    out += object.dump();
    out += '\n';
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "plain") return Format::plain;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw invalid_input("unknown format '" + std::string(name) + "'");
}

std::string rational_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string rational_decimal(const Rational& value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << value.convert_to<double>();
    return out.str();
}

std::string format_eval(const EvalResult& r, Format format) {
    switch (format) {
        case Format::plain:
            return r.j.str() + "\n";
        case Format::csv: {
            std::ostringstream out;
            out << "n,j,algorithm,bracket_low,bracket_high,frak_m,m_bar,iterations\n"
                << r.n << ',' << r.j << ',' << to_string(r.algorithm) << ',' << r.bracket_low
                << ',' << r.bracket_high << ',' << r.frak_m << ',' << r.m_bar << ','
                << r.iterations << '\n';
            return out.str();
        }
        case Format::json: {
            std::string out;
            append_json_line(out, ordered_json{{"n", r.n.str()},
                                               {"j", r.j.str()},
                                               {"algorithm", to_string(r.algorithm)},
                                               {"bracket_low", r.bracket_low.str()},
                                               {"bracket_high", r.bracket_high.str()},
                                               {"frak_m", r.frak_m},
                                               {"m_bar", r.m_bar},
                                               {"iterations", r.iterations}});
            return out;
        }
    }
    return {};
}

std::string format_fixed_points(std::span<const FixedPointRecord> records, Format format) {
    std::string out;
    if (format == Format::json) {
        for (const auto& rec : records) {
            append_json_line(out, ordered_json{{"ell", rec.ell},
                                               {"n_p", rec.n_p.str()},
                                               {"m_bar", rec.m_bar}});
        }
        return out;
    }
    const char sep = format == Format::csv ? ',' : ' ';
    std::ostringstream text;
    text << "ell" << sep << "n_p" << sep << "m_bar\n";
    for (const auto& rec : records) {
        text << rec.ell << sep << rec.n_p << sep << rec.m_bar << '\n';
    }
    return text.str();
}

std::string format_extremal_points(std::span<const ExtremalState> states, Format format) {
    std::string out;
    if (format == Format::json) {
        for (const auto& s : states) {
            append_json_line(out, ordered_json{{"index", s.index},
                                               {"n_e", s.n_e.str()},
                                               {"f", s.f},
                                               {"r", s.r},
                                               {"j", s.j_value.str()}});
        }
        return out;
    }
    const char sep = format == Format::csv ? ',' : ' ';
    std::ostringstream text;
    text << "index" << sep << "n_e" << sep << 'f' << sep << 'r' << sep << "j\n";
    for (const auto& s : states) {
        text << s.index << sep << s.n_e << sep << s.f << sep << s.r << sep << s.j_value << '\n';
    }
    return text.str();
}

std::string format_comparison(const Nat& n, const IterationComparison& c, Format format) {
    switch (format) {
        case Format::plain:
            return "n=" + n.str() + " fixed=" + std::to_string(c.fixed_point_iters) +
                   " extremal=" + std::to_string(c.extremal_iters) +
                   " pure=" + std::to_string(c.pure_point_count) +
                   " extremal_eval=" + std::to_string(c.extremal_eval_iters) + "\n";
        case Format::csv:
            return "n,fixed_point_iters,extremal_iters,pure_point_count,extremal_eval_iters\n" +
                   n.str() + ',' + std::to_string(c.fixed_point_iters) + ',' +
                   std::to_string(c.extremal_iters) + ',' + std::to_string(c.pure_point_count) +
                   ',' + std::to_string(c.extremal_eval_iters) + '\n';
        case Format::json: {
            std::string out;
            append_json_line(out, ordered_json{{"n", n.str()},
                                               {"fixed_point_iters", c.fixed_point_iters},
                                               {"extremal_iters", c.extremal_iters},
                                               {"pure_point_count", c.pure_point_count},
                                               {"extremal_eval_iters", c.extremal_eval_iters}});
            return out;
        }
    }
    return {};
}

std::string format_gain_series(const GainSeries& series, Format format) {
    std::string out;
    if (format == Format::json) {
        for (std::uint64_t i = 0; i < series.q_max; ++i) {
            append_json_line(out,
                             ordered_json{{"q", i + 1},
                                          {"m_bar_prefix_sum", series.m_bar_prefix_sums[i]},
                                          {"r_exact", rational_string(series.r_values[i])},
                                          {"r_percent", rational_decimal(series.r_values[i])},
                                          {"iteration_gain_exact",
                                           rational_string(series.iteration_gain[i])},
                                          {"iteration_gain_percent",
                                           rational_decimal(series.iteration_gain[i])}});
        }
        return out;
    }
    const char sep = format == Format::csv ? ',' : ' ';
    std::ostringstream text;
    text << "q" << sep << "m_bar_prefix_sum" << sep << "r_exact" << sep << "r_percent" << sep
         << "iteration_gain_exact" << sep << "iteration_gain_percent\n";
    for (std::uint64_t i = 0; i < series.q_max; ++i) {
        text << i + 1 << sep << series.m_bar_prefix_sums[i] << sep
             << rational_string(series.r_values[i]) << sep
             << rational_decimal(series.r_values[i]) << sep
             << rational_string(series.iteration_gain[i]) << sep
             << rational_decimal(series.iteration_gain[i]) << '\n';
    }
    return text.str();
}

std::string format_graph(std::span<const GraphRow> rows, Format format) {
    std::string out;
    if (format == Format::json) {
        for (const auto& row : rows) {
            append_json_line(out, ordered_json{{"n", std::to_string(row.n)},
                                               {"j", std::to_string(row.j)},
                                               {"class", to_string(row.tag)}});
        }
        return out;
    }
    const char sep = format == Format::csv ? ',' : ' ';
    std::ostringstream text;
    text << 'n' << sep << 'j' << sep << "class\n";
    for (const auto& row : rows) {
        text << row.n << sep << row.j << sep << to_string(row.tag) << '\n';
    }
    return text.str();
}

}  // namespace josephus
