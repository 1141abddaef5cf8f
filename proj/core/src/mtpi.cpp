#include <kepler/mtpi.hpp>

#include <cmath>
#include <string>

namespace kepler::mtpi {

namespace {

constexpr double kStepDenominatorFloor = 1e-14;

[[noreturn]] void throw_singular(const char* where, double r, std::uint64_t n) {
  throw SingularOriginError(std::string(where) + ": |r| = " + std::to_string(r) +
                            " at step " + std::to_string(n));
}

}  // namespace

AuxVariables compute_aux(const Vec3& q, const Vec3& p, double h,
                         const PhysParams& params) {
  if (!(h > 0.0)) {
    throw DomainError("compute_aux: h must be positive, got " + std::to_string(h));
  }
  const double q_norm = norm(q);
  if (q_norm < kSingularRadius) {
    throw SingularOriginError("compute_aux: |q| below the collision threshold");
  }
  const double s = h * dot(q, p) / (params.m * q_norm);
  const Vec3 r =
      q + (h / (2.0 * params.m)) *
              (s / (q_norm + std::sqrt(q_norm * q_norm + s * s)) - 1.0) * p;
  return {s, r};
}

AngleConstants compute_delta(const Vec3& r0, const Vec3& p0, double h0,
                             const PhysParams& params) {
  params.check();
  if (!(h0 > 0.0)) {
    throw DomainError("compute_delta: h0 must be positive, got " + std::to_string(h0));
  }
  const double r0_norm = norm(r0);
  if (r0_norm < kSingularRadius) {
    throw SingularOriginError("compute_delta: |r0| below the collision threshold");
  }
  if (norm_squared(cross(r0, p0)) == 0.0) {
    throw DegenerateOrbitError(
        "compute_delta: cross(r0, p0) = 0 (radial data, angular stepping undefined)");
  }
  const Vec3 drift = (h0 / params.m) * p0;
  const double drift_norm = norm(drift);
  if (!(drift_norm < r0_norm)) {
    throw StepTooLargeError("compute_delta: initial drift |h0 p0 / m| = " +
                            std::to_string(drift_norm) +
                            " must be smaller than |r0| = " + std::to_string(r0_norm));
  }
  const double rd = dot(r0, drift);
  const double cos_2delta =
      (r0_norm * r0_norm + rd) /
      (r0_norm * std::sqrt(r0_norm * r0_norm + 2.0 * rd + dot(drift, drift)));
  if (cos_2delta >= 1.0) {
    throw DegenerateOrbitError("compute_delta: cos 2delta = 1, no angular progress");
  }
  const double delta = std::acos(cos_2delta) / 2.0;
  const double cos_delta = std::sqrt((1.0 + cos_2delta) / 2.0);
  return {cos_delta, cos_2delta, delta};
}

State init(const Vec3& q0, const Vec3& p0, double h0, const PhysParams& params) {
  params.check();
  const AuxVariables aux = compute_aux(q0, p0, h0, params);
  const AngleConstants angles = compute_delta(aux.r, p0, h0, params);
  return {aux.r, p0, h0, 0, 0.0, 0.0, params, angles};
}

StepResult step(const State& state) {
  const double m = state.params.m;
  const double k = state.params.k;
  const double cos_delta = state.angles.cos_delta;

  const double r_norm = norm(state.r);
  if (r_norm < kSingularRadius) throw_singular("step", r_norm, state.n);

  const Vec3 r_next = state.r + (state.h / m) * state.p;
  const double r_next_sq = dot(r_next, r_next);
  const double r_next_norm = std::sqrt(r_next_sq);
  if (r_next_norm < kSingularRadius) throw_singular("step", r_next_norm, state.n);

  const Vec3 p_next =
      state.p - (k * state.h / (r_next_sq * r_norm * cos_delta)) * r_next;

  const double denominator = 2.0 * r_norm * state.angles.cos_2delta / r_next_norm -
                             1.0 +
                             k * state.h * state.h / (m * r_next_sq * r_norm * cos_delta);
  if (denominator <= kStepDenominatorFloor) {
    throw StepCollapseError(
        "step: adaptive step denominator " + std::to_string(denominator) +
        " collapsed at step " + std::to_string(state.n) +
        " (trajectory too close to the center for delta = " +
        std::to_string(state.angles.delta) + ")");
  }
  const double h_next = state.h / denominator;

  // Peek one drift ahead; the same expression is re-evaluated as r_{n+1}
  // of the next step, so nothing needs caching.
  const Vec3 r_peek = r_next + (h_next / m) * p_next;
  const double r_peek_norm = norm(r_peek);
  const Vec3 q_next =
      (r_peek_norm * r_next + r_next_norm * r_peek) / (r_next_norm + r_peek_norm);

  // Compensated accumulation: h spans orders of magnitude near periapsis.
  const double y = state.h - state.t_comp;
  const double t_next = state.t + y;
  const double t_comp_next = (t_next - state.t) - y;

  State next{r_next,      p_next, h_next,       state.n + 1,
             t_next,      t_comp_next, state.params, state.angles};
  return {next, Output{q_next, p_next, t_next, h_next}};
}

Vec3 current_position(const State& state) {
  const double r_norm = norm(state.r);
  if (r_norm < kSingularRadius) throw_singular("current_position", r_norm, state.n);
  const Vec3 r_peek = state.r + (state.h / state.params.m) * state.p;
  const double r_peek_norm = norm(r_peek);
  return (r_peek_norm * state.r + r_norm * r_peek) / (r_norm + r_peek_norm);
}

}  // namespace kepler::mtpi
