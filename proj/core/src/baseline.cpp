#include <kepler/baseline.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace kepler::baseline {

namespace {

Vec3 acceleration_of_momentum(const Vec3& q, const PhysParams& params,
                              const char* where) {
  const double r = norm(q);
  if (r < kSingularRadius) {
    throw SingularOriginError(std::string(where) +
                              ": |q| below the collision threshold");
  }
  return (-params.k / (r * r * r)) * q;
}

// Leapfrog on (q, p) only; epoch handling is left to the callers so that
// composed steps still advance t by exactly dt.
void kick_drift_kick(Vec3& q, Vec3& p, const PhysParams& params, double dt,
                     const char* where) {
  p += (dt / 2.0) * acceleration_of_momentum(q, params, where);
  q += (dt / params.m) * p;
  p += (dt / 2.0) * acceleration_of_momentum(q, params, where);
}

}  // namespace

PhaseState rk4_step(const PhaseState& state, const PhysParams& params, double dt) {
  const auto eval = [&](const Vec3& q, const Vec3& p) -> Derivatives {
    return {p / params.m, acceleration_of_momentum(q, params, "rk4_step")};
  };
  const Derivatives k1 = eval(state.q, state.p);
  const Derivatives k2 = eval(state.q + (dt / 2.0) * k1.dq_dt, state.p + (dt / 2.0) * k1.dp_dt);
  const Derivatives k3 = eval(state.q + (dt / 2.0) * k2.dq_dt, state.p + (dt / 2.0) * k2.dp_dt);
  const Derivatives k4 = eval(state.q + dt * k3.dq_dt, state.p + dt * k3.dp_dt);
  return {state.q + (dt / 6.0) * (k1.dq_dt + 2.0 * (k2.dq_dt + k3.dq_dt) + k4.dq_dt),
          state.p + (dt / 6.0) * (k1.dp_dt + 2.0 * (k2.dp_dt + k3.dp_dt) + k4.dp_dt),
          state.t + dt};
}

PhaseState leapfrog_step(const PhaseState& state, const PhysParams& params, double dt) {
  Vec3 q = state.q;
  Vec3 p = state.p;
  kick_drift_kick(q, p, params, dt, "leapfrog_step");
  return {q, p, state.t + dt};
}

PhaseState composition4_step(const PhaseState& state, const PhysParams& params,
                             double dt) {
  Vec3 q = state.q;
  Vec3 p = state.p;
  kick_drift_kick(q, p, params, kTripleJumpW1 * dt, "composition4_step");
  kick_drift_kick(q, p, params, kTripleJumpW0 * dt, "composition4_step");
  kick_drift_kick(q, p, params, kTripleJumpW1 * dt, "composition4_step");
  return {q, p, state.t + dt};
}

PhaseState fixed_step(FixedStepMethod method, const PhaseState& state,
                      const PhysParams& params, double dt) {
  switch (method) {
    case FixedStepMethod::rk4:
      return rk4_step(state, params, dt);
    case FixedStepMethod::leapfrog:
      return leapfrog_step(state, params, dt);
    case FixedStepMethod::composition4:
      return composition4_step(state, params, dt);
  }
  throw DomainError("fixed_step: unknown method");
}

PhaseState oracle_state_at(const Vec3& q0, const Vec3& p0, const PhysParams& params,
                           double t_target, double rel_tol) {
  if (!(rel_tol >= 1e-12 && rel_tol <= 1e-4)) {
    throw DomainError("oracle_state_at: rel_tol must lie in [1e-12, 1e-4], got " +
                      std::to_string(rel_tol));
  }
  if (t_target == 0.0) {
    return {q0, p0, 0.0};
  }

  const double span = std::abs(t_target);
  const auto max_steps = static_cast<std::uint64_t>(
      std::ceil(std::max(1.0, span)) * static_cast<double>(std::uint64_t{1} << 20));

  const auto run = [&](std::uint64_t steps) -> PhaseState {
    const double dt = t_target / static_cast<double>(steps);
    PhaseState s{q0, p0, 0.0};
    for (std::uint64_t i = 0; i < steps; ++i) {
      s = rk4_step(s, params, dt);
    }
    return s;
  };

  std::uint64_t steps = std::max<std::uint64_t>(
      64, std::bit_ceil(static_cast<std::uint64_t>(span) + 1));
  PhaseState coarse = run(steps);
  while (true) {
    if (steps * 2 > max_steps) {
      throw ConvergenceError(
          "oracle_state_at: no convergence to rel_tol = " + std::to_string(rel_tol) +
          " within 2^20 steps per unit time (t_target = " + std::to_string(t_target) + ")");
    }
    steps *= 2;
    PhaseState fine = run(steps);
    const double q_scale = std::max(norm(fine.q), kSingularRadius);
    const double p_scale = std::max(norm(fine.p), kSingularRadius);
    if (norm(fine.q - coarse.q) <= rel_tol * q_scale &&
        norm(fine.p - coarse.p) <= rel_tol * p_scale) {
      fine.t = t_target;
      return fine;
    }
    coarse = fine;
  }
}

}  // namespace kepler::baseline
