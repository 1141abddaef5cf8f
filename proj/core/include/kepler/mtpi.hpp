// MTPI: an explicit, exactly conservative integrator for the Kepler problem
// that advances the true anomaly by a fixed angle 2*delta per step and adapts
// the time step accordingly (large steps far out, small steps near periapsis).
//
// The scheme works on an auxiliary chain of positions r_n driven by plain
// drift/kick updates,
//
//   r_{n+1} = r_n + h_n p_n / m
//   p_{n+1} = p_n - k h_n r_{n+1} / (|r_{n+1}|^2 |r_n| cos delta)
//   h_{n+1} = h_n / (2 |r_n| cos 2delta / |r_{n+1}| - 1
//                    + k h_n^2 / (m |r_{n+1}|^2 |r_n| cos delta))
//
// and reads the physical position off the chain as the angle bisector
//
//   q_{n+1} = (|r_{n+2}| r_{n+1} + |r_{n+1}| r_{n+2}) / (|r_{n+1}| + |r_{n+2}|).
//
// Successive r (and q) vectors are separated by the constant angle 2*delta,
// and energy, angular momentum and the Laplace-Runge-Lenz vector are conserved
// to round-off for any number of steps.
#pragma once

#include <cstdint>
#include <utility>

#include <kepler/errors.hpp>
#include <kepler/system.hpp>
#include <kepler/vec3.hpp>

namespace kepler::mtpi {

/// Angle constants fixed at initialization. cos_2delta is always positive
/// (guaranteed by the admissibility check |h0 p0 / m| < |r0|), delta is the
/// positive half-increment and cos_delta = sqrt((1 + cos_2delta) / 2).
struct AngleConstants {
  double cos_delta;
  double cos_2delta;
  double delta;
};

/// Auxiliary variables derived from a physical phase-space point.
struct AuxVariables {
  double s;  ///< h * dot(q, p) / (m |q|), the scaled radial velocity
  Vec3 r;    ///< auxiliary chain position
};

/// Carried state of the scheme: the newest auxiliary position, the momentum,
/// the current adaptive step and the accumulated epoch. Immutable value; step()
/// returns a fresh one.
struct State {
  Vec3 r;              ///< auxiliary position r_n
  Vec3 p;              ///< momentum p_n
  double h;            ///< adaptive step h_n, always positive
  std::uint64_t n;     ///< step index
  double t;            ///< accumulated epoch, compensated sum of h_j
  double t_comp;       ///< running compensation term of the epoch sum
  PhysParams params;
  AngleConstants angles;
};

/// Physical output of one step.
struct Output {
  Vec3 q;         ///< position q_{n+1}
  Vec3 p;         ///< momentum p_{n+1}
  double t;       ///< accumulated epoch after the step
  double h_next;  ///< adaptive step carried into the next step
};

struct StepResult {
  State state;
  Output output;
};

/// Auxiliary variables (s, r) for a phase-space point and step h.
/// Requires |q| above the collision threshold and h > 0.
AuxVariables compute_aux(const Vec3& q, const Vec3& p, double h,
                         const PhysParams& params);

/// Angle constants from the initial auxiliary position r0, momentum p0 and
/// step h0:
///
///   cos 2delta = (|r0|^2 + dot(r0, P0)) / (|r0| sqrt(|r0|^2 + 2 dot(r0, P0) + |P0|^2)),
///   P0 = h0 p0 / m.
///
/// Throws DegenerateOrbitError for radial data (cross(r0, p0) = 0, no angular
/// progress) and StepTooLargeError when |P0| >= |r0|.
AngleConstants compute_delta(const Vec3& r0, const Vec3& p0, double h0,
                             const PhysParams& params);

/// Builds the initial state from physical initial data (q0, p0) and h0.
State init(const Vec3& q0, const Vec3& p0, double h0, const PhysParams& params);

/// Advances the chain by one step. Throws StepCollapseError if the adaptive
/// step denominator drops to 1e-14 or below (trajectory too close to the
/// center for the chosen delta); messages carry the failing step index.
StepResult step(const State& state);

/// Position reproduced from the carried state via the bisector formula.
/// Matches the most recent Output::q (the initial q0 for a fresh state) up to
/// round-off.
Vec3 current_position(const State& state);

/// init + n_steps x step, invoking sink(const Output&) after each step.
/// Deterministic: identical inputs give bit-identical outputs.
template <typename Sink>
State propagate(const Vec3& q0, const Vec3& p0, double h0,
                const PhysParams& params, std::uint64_t n_steps, Sink&& sink) {
  if (n_steps < 1) {
    throw DomainError("propagate: n_steps must be at least 1");
  }
  State state = init(q0, p0, h0, params);
  for (std::uint64_t i = 0; i < n_steps; ++i) {
    StepResult result = step(state);
    sink(std::as_const(result.output));
    state = result.state;
  }
  return state;
}

}  // namespace kepler::mtpi
