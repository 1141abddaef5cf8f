// Running-supremum error metrics for integrator output streams: relative
// drifts of E, |L|, |A|, direction errors (1 - cos) of L and A, and the
// deviation of the radius from the analytic orbit shape.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <kepler/anomaly.hpp>
#include <kepler/errors.hpp>
#include <kepler/system.hpp>

namespace kepler::diag {

enum class Metric : int { e_E = 0, e_L, e_dirL, e_A, e_dirA, e_q };

inline constexpr std::size_t kMetricCount = 6;

inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::e_E, Metric::e_L, Metric::e_dirL, Metric::e_A, Metric::e_dirA,
    Metric::e_q};

std::string_view metric_name(Metric metric);
std::optional<Metric> metric_from_name(std::string_view name);

/// Instantaneous errors of one observation. Disabled metrics read 0.
struct Sample {
  double t = 0.0;
  double e_E = 0.0;
  double e_L = 0.0;
  double e_dirL = 0.0;
  double e_A = 0.0;
  double e_dirA = 0.0;
  double e_q = 0.0;

  double metric(Metric m) const;
};

/// Final suprema plus observation count; field names double as the CSV
/// column names.
struct Summary {
  double e_E = 0.0;
  double e_L = 0.0;
  double e_dirL = 0.0;
  double e_A = 0.0;
  double e_dirA = 0.0;
  double e_q = 0.0;
  std::array<bool, kMetricCount> enabled{};
  std::uint64_t observations = 0;

  double metric(Metric m) const;
};

/// Accumulates the running suprema of the six error metrics against the
/// reference integrals of the trajectory's own initial state.
///
/// Metrics whose reference is degenerate (E0 = 0, L0 = 0, or |A0| at the
/// circular threshold) are disabled instead of dividing by zero. Samples are
/// kept in a capacity-bounded log; when full, every other sample is dropped
/// and the keep stride doubles. Single-writer; distinct trackers are
/// independent.
class ErrorTracker {
 public:
  explicit ErrorTracker(const PhaseState& initial, const PhysParams& params,
                        std::size_t sample_capacity = std::size_t{1} << 20);

  /// Computes the instantaneous errors of `state`, folds them into the
  /// suprema and returns them.
  Sample observe(const PhaseState& state);

  /// Throws DomainError if nothing has been observed yet.
  Summary summarize() const;

  const std::vector<Sample>& samples() const { return samples_; }
  bool enabled(Metric metric) const;
  std::uint64_t observations() const { return observations_; }

  /// Orbital frame of the reference state; absent when L0 = 0.
  const anomaly::OrbitFrame* frame() const {
    return frame_ ? &*frame_ : nullptr;
  }

 private:
  PhysParams params_;
  FirstIntegrals reference_;
  double l0_norm_;
  double a0_norm_;
  std::optional<anomaly::OrbitFrame> frame_;
  std::array<bool, kMetricCount> enabled_{};
  std::array<double, kMetricCount> sup_{};
  std::vector<Sample> samples_;
  std::size_t capacity_;
  std::uint64_t keep_stride_ = 1;
  std::uint64_t observations_ = 0;
};

}  // namespace kepler::diag
