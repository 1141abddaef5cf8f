// Experiment configuration and results for the benchmark harness.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <kepler/diagnostics.hpp>
#include <kepler/system.hpp>
#include <kepler/vec3.hpp>

namespace kepler::bench {

enum class Method { mtpi, rk4, leapfrog, composition4 };

inline constexpr std::array<Method, 4> kAllMethods = {
    Method::mtpi, Method::rk4, Method::leapfrog, Method::composition4};

std::string_view method_name(Method method);
std::optional<Method> method_from_name(std::string_view name);

/// One experiment: initial data, physical constants, the integrator, its
/// step (dt for fixed-step methods, h0 for mtpi) and the run length, given
/// either as a step count or as a number of orbital periods (bound orbits
/// only).
struct Scenario {
  std::string label;  ///< defaults to the method name when empty
  Method method = Method::mtpi;
  Vec3 q0;
  Vec3 p0;
  PhysParams params;
  double step = 0.0;
  std::optional<std::uint64_t> n_steps;
  std::optional<double> n_periods;
  std::uint64_t sample_stride = 1;

  std::string_view effective_label() const {
    return label.empty() ? method_name(method) : std::string_view(label);
  }
};

/// Throws ConfigError naming the offending field.
void validate(const Scenario& scenario);

/// One recorded sample: step index, epoch, phase-space point, current step
/// size and the six instantaneous error metrics.
struct SampleRow {
  std::uint64_t n = 0;
  double t = 0.0;
  Vec3 q;
  Vec3 p;
  double h = 0.0;
  double e_E = 0.0;
  double e_L = 0.0;
  double e_dirL = 0.0;
  double e_A = 0.0;
  double e_dirA = 0.0;
  double e_q = 0.0;

  friend bool operator==(const SampleRow&, const SampleRow&) = default;
};

struct RunResult {
  Scenario scenario;
  std::vector<SampleRow> samples;
  diag::Summary summary;
  /// T/dt for fixed-step methods (NaN for unbound orbits), pi/delta for mtpi.
  double steps_per_period = 0.0;
};

}  // namespace kepler::bench
