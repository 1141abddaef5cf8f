// Anomaly bookkeeping for elliptic orbits: the periapsis-aligned orbital
// frame, signed true anomaly, eccentric/mean anomaly conversions, the Kepler
// equation and its inverse, and the analytic orbit-shape radius.
//
// All anomalies are kept as continuous unwrapped reals sharing a winding
// number, so the mean anomaly stays linear in time across revolutions.
#pragma once

#include <cstdint>

#include <kepler/errors.hpp>
#include <kepler/system.hpp>
#include <kepler/vec3.hpp>

namespace kepler::anomaly {

/// Right-handed orthonormal triad spanned by the orbit: a_hat points toward
/// periapsis, l_hat along the angular momentum, b_hat = l_hat x a_hat along
/// the direction of motion at periapsis. The signed true anomaly of an
/// in-plane point is atan2(dot(q, b_hat), dot(q, a_hat)).
struct OrbitFrame {
  Vec3 a_hat;
  Vec3 b_hat;
  Vec3 l_hat;
  double e;  ///< orbital eccentricity
  FirstIntegrals integrals;
  PhysParams params;
};

/// Builds the frame from initial data. For near-circular orbits
/// (|A| <= 1e-12 k) the periapsis direction is taken as q0_hat, which makes
/// the initial true anomaly zero. Throws DegenerateOrbitError when L = 0.
OrbitFrame build_frame(const Vec3& q0, const Vec3& p0, const PhysParams& params);

/// Signed true anomaly of q in (-pi, pi].
double signed_true_anomaly(const OrbitFrame& frame, const Vec3& q);

/// nu_n = 2 n delta + nu0, unwrapped (no modular reduction).
double true_anomaly_at_step(double nu0, std::int64_t n, double delta);

/// Eccentric anomaly from true anomaly, branch-consistent:
/// u = 2 atan2(sqrt(1-e) sin(nu/2), sqrt(1+e) cos(nu/2)) carried to the same
/// 2pi winding as nu. Requires e in [0, 1).
double true_to_eccentric(double nu, double e);

/// Kepler equation: mean anomaly M = u - e sin(u).
double mean_from_eccentric(double u, double e);

/// Inverts the Kepler equation: returns u with |u - e sin(u) - M| <= tol.
/// Newton iteration seeded at M + 0.85 e sign(sin M), with a bisection
/// fallback on [M - e, M + e]. Requires e in [0, 1) and tol >= 1e-15.
double solve_kepler(double mean_anomaly, double e, double tol);

/// Rate of change of the mean anomaly, 2 sqrt(2) |E|^(3/2) / (k sqrt(m)).
/// Requires a bound orbit (E < 0).
double mean_motion(const FirstIntegrals& integrals, const PhysParams& params);

/// Orbital period 2 pi / mean_motion. Requires E < 0.
double orbital_period(const FirstIntegrals& integrals, const PhysParams& params);

/// Epoch of the point at true anomaly nu, given that nu0 was visited at t0:
/// t = t0 + (M(nu) - M(nu0)) / mean_motion. Requires a bound orbit.
double epoch_from_anomaly(const OrbitFrame& frame, double nu, double t0, double nu0);

/// Analytic orbit radius at the given angle from periapsis:
/// 1/q = (k m / |L|^2) (1 + e cos(angle)). Throws DomainError when
/// 1 + e cos(angle) <= 0 (unbounded radius, only possible for e >= 1).
double orbit_radius(const OrbitFrame& frame, double angle_from_periapsis);

}  // namespace kepler::anomaly
