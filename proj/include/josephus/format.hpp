#pragma once

#include <span>
#include <string>
#include <string_view>

#include "josephus/bench.hpp"
#include "josephus/core.hpp"

// Text renderings shared by the CLI and the golden-file tests. CSV is
// comma-separated with a header row and LF endings; JSON is one object per
// line. Big integers are always exact decimal strings.

namespace josephus {

enum class Format { plain, csv, json };

Format parse_format(std::string_view name);

std::string format_eval(const EvalResult& result, Format format);
std::string format_fixed_points(std::span<const FixedPointRecord> records, Format format);
std::string format_extremal_points(std::span<const ExtremalState> states, Format format);
std::string format_comparison(const Nat& n, const IterationComparison& comparison,
                              Format format);
std::string format_gain_series(const GainSeries& series, Format format);
std::string format_graph(std::span<const GraphRow> rows, Format format);

/// "num/den" for rationals ("0/1" for zero).
std::string rational_string(const Rational& value);
/// Six fractional digits, for plotting only.
std::string rational_decimal(const Rational& value);

}  // namespace josephus
