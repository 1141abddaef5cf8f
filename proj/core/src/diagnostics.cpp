#include <kepler/diagnostics.hpp>

#include <cmath>

namespace kepler::diag {

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::e_E: return "e_E";
    case Metric::e_L: return "e_L";
    case Metric::e_dirL: return "e_dirL";
    case Metric::e_A: return "e_A";
    case Metric::e_dirA: return "e_dirA";
    case Metric::e_q: return "e_q";
  }
  return "?";
}

std::optional<Metric> metric_from_name(std::string_view name) {
  for (Metric m : kAllMetrics) {
    if (metric_name(m) == name) {
      return m;
    }
  }
  return std::nullopt;
}

double Sample::metric(Metric m) const {
  switch (m) {
    case Metric::e_E: return e_E;
    case Metric::e_L: return e_L;
    case Metric::e_dirL: return e_dirL;
    case Metric::e_A: return e_A;
    case Metric::e_dirA: return e_dirA;
    case Metric::e_q: return e_q;
  }
  return 0.0;
}

double Summary::metric(Metric m) const {
  switch (m) {
    case Metric::e_E: return e_E;
    case Metric::e_L: return e_L;
    case Metric::e_dirL: return e_dirL;
    case Metric::e_A: return e_A;
    case Metric::e_dirA: return e_dirA;
    case Metric::e_q: return e_q;
  }
  return 0.0;
}

namespace {

constexpr std::size_t index(Metric m) { return static_cast<std::size_t>(m); }

// 1 - cos of the angle between a and b, with the denominator grouped as
// sqrt(|a|^2 |b|^2) so that identical inputs give exactly zero.
double direction_error(const Vec3& a, const Vec3& b) {
  return 1.0 - dot(a, b) / std::sqrt(norm_squared(a) * norm_squared(b));
}

}  // namespace

ErrorTracker::ErrorTracker(const PhaseState& initial, const PhysParams& params,
                           std::size_t sample_capacity)
    : params_(params),
      reference_(first_integrals(initial, params)),
      l0_norm_(norm(reference_.L)),
      a0_norm_(norm(reference_.A)),
      capacity_(std::max<std::size_t>(sample_capacity, 2)) {
  enabled_[index(Metric::e_E)] = reference_.E != 0.0;
  enabled_[index(Metric::e_L)] = l0_norm_ != 0.0;
  enabled_[index(Metric::e_dirL)] = l0_norm_ != 0.0;
  // The circular threshold matches build_frame's periapsis-direction rule.
  enabled_[index(Metric::e_A)] = a0_norm_ > 1e-12 * params.k;
  enabled_[index(Metric::e_dirA)] = a0_norm_ > 1e-12 * params.k;
  if (l0_norm_ != 0.0) {
    frame_ = anomaly::build_frame(initial.q, initial.p, params);
  }
  enabled_[index(Metric::e_q)] = frame_.has_value();
}

Sample ErrorTracker::observe(const PhaseState& state) {
  Sample sample;
  sample.t = state.t;
  const FirstIntegrals current = first_integrals(state, params_);

  if (enabled_[index(Metric::e_E)]) {
    sample.e_E = std::abs((current.E - reference_.E) / reference_.E);
  }
  if (enabled_[index(Metric::e_L)]) {
    sample.e_L = std::abs((norm(current.L) - l0_norm_) / l0_norm_);
  }
  if (enabled_[index(Metric::e_dirL)]) {
    sample.e_dirL = direction_error(current.L, reference_.L);
  }
  if (enabled_[index(Metric::e_A)]) {
    sample.e_A = std::abs((norm(current.A) - a0_norm_) / a0_norm_);
  }
  if (enabled_[index(Metric::e_dirA)]) {
    sample.e_dirA = direction_error(current.A, reference_.A);
  }
  if (enabled_[index(Metric::e_q)]) {
    const double nu = anomaly::signed_true_anomaly(*frame_, state.q);
    const double analytic = anomaly::orbit_radius(*frame_, nu);
    sample.e_q = std::abs(analytic - norm(state.q)) / analytic;
  }

  for (Metric m : kAllMetrics) {
    sup_[index(m)] = std::max(sup_[index(m)], sample.metric(m));
  }

  if (samples_.size() == capacity_) {
    // Halve the log and record only every other observation from here on.
    std::vector<Sample> kept;
    kept.reserve(capacity_ / 2 + 1);
    for (std::size_t i = 0; i < samples_.size(); i += 2) {
      kept.push_back(samples_[i]);
    }
    samples_ = std::move(kept);
    keep_stride_ *= 2;
  }
  if (observations_ % keep_stride_ == 0) {
    samples_.push_back(sample);
  }
  ++observations_;
  return sample;
}

Summary ErrorTracker::summarize() const {
  if (observations_ == 0) {
    throw DomainError("ErrorTracker::summarize: no observations recorded");
  }
  Summary summary;
  summary.e_E = sup_[index(Metric::e_E)];
  summary.e_L = sup_[index(Metric::e_L)];
  summary.e_dirL = sup_[index(Metric::e_dirL)];
  summary.e_A = sup_[index(Metric::e_A)];
  summary.e_dirA = sup_[index(Metric::e_dirA)];
  summary.e_q = sup_[index(Metric::e_q)];
  summary.enabled = enabled_;
  summary.observations = observations_;
  return summary;
}

bool ErrorTracker::enabled(Metric metric) const {
  return enabled_[index(metric)];
}

}  // namespace kepler::diag
