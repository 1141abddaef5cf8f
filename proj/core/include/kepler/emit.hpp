// Result serialization: CSV and JSONL sample streams (round-trip exact,
// 17 significant digits) and self-contained SVG comparison plots.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <kepler/diagnostics.hpp>
#include <kepler/scenario.hpp>

namespace kepler::bench {

inline constexpr std::string_view kCsvHeader =
    "n,t,qx,qy,qz,px,py,pz,h,e_E,e_L,e_dirL,e_A,e_dirA,e_q";

/// Formats v with 17 significant digits; strtod recovers the exact bits.
std::string format_real(double v);

/// Header row plus one row per sample, LF newlines.
void emit_csv(const RunResult& result, std::ostream& out);

/// One JSON object per sample per line, same field names as the CSV columns.
void emit_jsonl(const RunResult& result, std::ostream& out);

/// Parses a stream produced by emit_csv; throws IoError on malformed input.
std::vector<SampleRow> parse_csv(std::istream& in);

/// Renders one metric of several runs as a self-contained SVG (viewBox
/// 960x600, log-scale y with values clamped to 1e-18, one polyline per run
/// labeled by scenario label). Byte output is deterministic in the input.
///
/// Throws EmptyMetricError if any run has the metric disabled and
/// DomainError when a run has no samples.
std::string render_plot_svg(const std::vector<RunResult>& results,
                            diag::Metric metric);

/// render_plot_svg written to a file.
void emit_plot(const std::vector<RunResult>& results, diag::Metric metric,
               const std::filesystem::path& destination);

}  // namespace kepler::bench
