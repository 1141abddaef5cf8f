// Fixed-step reference integrators: classical RK4, kick-drift-kick leapfrog
// and a 4th-order triple-jump composition of leapfrog, plus a high-accuracy
// oracle propagator used as the reference solution in tests.
#pragma once

#include <cmath>

#include <kepler/errors.hpp>
#include <kepler/system.hpp>
#include <kepler/vec3.hpp>

namespace kepler::baseline {

enum class FixedStepMethod { rk4, leapfrog, composition4 };

/// Triple-jump composition coefficients: substeps w1*dt, w0*dt, w1*dt with
/// w1 = 1 / (2 - 2^(1/3)) and w0 = 1 - 2 w1.
inline const double kTripleJumpW1 = 1.0 / (2.0 - std::cbrt(2.0));
inline const double kTripleJumpW0 = 1.0 - 2.0 * kTripleJumpW1;

/// Classical four-stage Runge-Kutta step; t advances by exactly dt.
PhaseState rk4_step(const PhaseState& state, const PhysParams& params, double dt);

/// Kick-drift-kick leapfrog step; emits synchronized (q, p).
PhaseState leapfrog_step(const PhaseState& state, const PhysParams& params, double dt);

/// 4th-order Suzuki-Yoshida composition: three leapfrog substeps with the
/// triple-jump coefficients; t advances by exactly dt.
PhaseState composition4_step(const PhaseState& state, const PhysParams& params,
                             double dt);

/// Dispatch on the method enum.
PhaseState fixed_step(FixedStepMethod method, const PhaseState& state,
                      const PhysParams& params, double dt);

/// High-accuracy state at t_target: RK4 with the step halved until two runs
/// agree within rel_tol in both position and momentum. The finer run is
/// returned with t set to t_target.
///
/// rel_tol must lie in [1e-12, 1e-4]. Throws ConvergenceError when the
/// halving ladder exceeds 2^20 steps per unit time.
PhaseState oracle_state_at(const Vec3& q0, const Vec3& p0, const PhysParams& params,
                           double t_target, double rel_tol);

}  // namespace kepler::baseline
