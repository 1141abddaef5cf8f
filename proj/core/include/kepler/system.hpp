// Physical model of the Kepler problem: parameters, phase state, the
// continuous right-hand side and the three conserved quantities.
#pragma once

#include <kepler/errors.hpp>
#include <kepler/vec3.hpp>

namespace kepler {

/// Positions closer to the center than this are treated as a collision
/// instead of producing infinities.
inline constexpr double kSingularRadius = 1e-300;

/// Mass and force constant of the system  dp/dt = -k q / |q|^3,  p = m dq/dt.
struct PhysParams {
  double m = 1.0;
  double k = 1.0;

  /// Throws DomainError unless both constants are positive.
  void check() const;
};

/// Canonical phase-space point with its epoch.
struct PhaseState {
  Vec3 q;         ///< position; |q| > 0 away from the singularity
  Vec3 p;         ///< momentum
  double t = 0.0; ///< epoch
};

struct Derivatives {
  Vec3 dq_dt;
  Vec3 dp_dt;
};

/// Snapshot of the conserved quantities of a trajectory.
struct FirstIntegrals {
  Vec3 L;     ///< angular momentum q x p
  double E;   ///< total energy
  Vec3 A;     ///< Laplace-Runge-Lenz vector, points toward periapsis
};

/// Right-hand side of the equations of motion.
/// Throws SingularOriginError when |q| < origin_epsilon.
Derivatives kepler_rhs(const PhaseState& state, const PhysParams& params,
                       double origin_epsilon = kSingularRadius);

Vec3 angular_momentum(const PhaseState& state);

double energy(const PhaseState& state, const PhysParams& params);

Vec3 lrl_vector(const PhaseState& state, const PhysParams& params);

FirstIntegrals first_integrals(const PhaseState& state, const PhysParams& params);

/// Orbital eccentricity sqrt(1 + 2 E |L|^2 / (m k^2)).
///
/// Radicands in [-1e-9, 0) are clamped to zero to absorb round-off near
/// circular orbits; anything lower throws DomainError (the integrals are
/// inconsistent).
double eccentricity(const FirstIntegrals& integrals, const PhysParams& params);

}  // namespace kepler
