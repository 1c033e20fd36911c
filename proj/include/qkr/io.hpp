#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qkr/experiments.hpp"
#include "qkr/observables.hpp"

// Deterministic text output and small parsing helpers shared by the CLI.
// Every float is rendered with 17 significant digits, '.' decimal separator
// and '\n' line endings, so identical configurations produce byte-identical
// files.

namespace qkr {

// Shortest-round-trip-safe rendering: printf "%.17g", C locale.
std::string format_double(double v);

// "0.5pi", "-0.25pi", "pi" or plain radians.
double parse_angle(const std::string& text);

// "p/q" in lowest terms with p, q positive; a bare integer means q = 1.
std::pair<int, int> parse_rational(const std::string& text);

// Comma-separated doubles.
std::vector<double> parse_double_list(const std::string& text);

using Provenance = std::vector<std::pair<std::string, std::string>>;

// CSV with a '#'-prefixed provenance block, then one header row, then data.
void write_moments_csv(const std::string& path, const MomentSeries& series,
                       const Provenance& provenance);
void write_snapshots_csv(const std::string& path, const std::vector<SnapshotPoint>& points,
                         const Provenance& provenance);
void write_sweep_csv(const std::string& path, const std::vector<SweepRecord>& records,
                     const Provenance& provenance);
void write_figure1_csv(const std::string& path,
                       const std::vector<VarianceCoefficientPoint>& points,
                       const Provenance& provenance);

} // namespace qkr
