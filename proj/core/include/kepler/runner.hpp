// Experiment execution: single scenarios, comparisons and the built-in
// four-method reference experiment.
#pragma once

#include <filesystem>
#include <vector>

#include <kepler/scenario.hpp>

namespace kepler::bench {

/// Propagates the scenario, observing the diagnostics tracker every
/// sample_stride steps (plus the final step). Deterministic.
RunResult run_scenario(const Scenario& scenario);

/// Validates every scenario up front (ConfigError), then runs them
/// concurrently, results in input order. Runtime failures are collected
/// across all scenarios and reported together as a ComparisonError.
std::vector<RunResult> run_comparison(const std::vector<Scenario>& scenarios);

/// The built-in reference experiment: k = 3, m = 0.5, q0 = (100, 0, 0.1),
/// p0 = (0, 0.01, 0); leapfrog at dt = 0.01, rk4 and composition4 at
/// dt = 0.02, mtpi at h0 = 10 (delta close to 0.001).
std::vector<Scenario> paper_scenarios(double periods, std::uint64_t sample_stride);

enum class OutputFormat { csv, jsonl };

struct PaperOptions {
  double periods = 5.0;
  std::uint64_t sample_stride = 100;
  std::filesystem::path out_dir = "out";
  OutputFormat format = OutputFormat::csv;
  bool write_plots = true;
};

/// Metrics plotted by the reference experiment (and by the CLI's --plot).
inline constexpr std::array<diag::Metric, 4> kComparisonPlotMetrics = {
    diag::Metric::e_E, diag::Metric::e_L, diag::Metric::e_A, diag::Metric::e_q};

/// Runs paper_scenarios and writes one sample file per run plus the four
/// comparison plots into out_dir. Returns the results.
std::vector<RunResult> paper_experiment(const PaperOptions& options);

/// Writes result sample files (<label>.csv or .jsonl) and, when requested,
/// the comparison plots of kComparisonPlotMetrics (skipping metrics disabled
/// for any run). Used by both paper_experiment and the CLI.
void write_outputs(const std::vector<RunResult>& results,
                   const std::filesystem::path& out_dir, OutputFormat format,
                   bool write_plots);

}  // namespace kepler::bench
