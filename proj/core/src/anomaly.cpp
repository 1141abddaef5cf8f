#include <kepler/anomaly.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace kepler::anomaly {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_elliptic(double e) {
  if (!(e >= 0.0 && e < 1.0)) {
    throw DomainError("eccentricity must lie in [0, 1) for elliptic anomalies, got " +
                      std::to_string(e));
  }
}

}  // namespace

OrbitFrame build_frame(const Vec3& q0, const Vec3& p0, const PhysParams& params) {
  params.check();
  const PhaseState state{q0, p0, 0.0};
  const FirstIntegrals integrals = first_integrals(state, params);
  const double l_norm = norm(integrals.L);
  if (l_norm == 0.0) {
    throw DegenerateOrbitError("build_frame: angular momentum is zero (radial orbit)");
  }
  const Vec3 l_hat = integrals.L / l_norm;
  const double a_norm = norm(integrals.A);
  Vec3 a_hat = a_norm > 1e-12 * params.k ? integrals.A / a_norm : q0 / norm(q0);
  const Vec3 b_hat = normalized(cross(l_hat, a_hat));
  a_hat = normalized(cross(b_hat, l_hat));
  return {a_hat, b_hat, l_hat, eccentricity(integrals, params), integrals, params};
}

double signed_true_anomaly(const OrbitFrame& frame, const Vec3& q) {
  return std::atan2(dot(q, frame.b_hat), dot(q, frame.a_hat));
}

double true_anomaly_at_step(double nu0, std::int64_t n, double delta) {
  if (!(delta > 0.0)) {
    throw DomainError("true_anomaly_at_step: delta must be positive");
  }
  return 2.0 * static_cast<double>(n) * delta + nu0;
}

double true_to_eccentric(double nu, double e) {
  require_elliptic(e);
  const double winding = std::floor((nu + kPi) / kTwoPi);
  const double nu_principal = nu - kTwoPi * winding;  // in [-pi, pi)
  const double u_principal =
      2.0 * std::atan2(std::sqrt(1.0 - e) * std::sin(0.5 * nu_principal),
                       std::sqrt(1.0 + e) * std::cos(0.5 * nu_principal));
  return u_principal + kTwoPi * winding;
}

double mean_from_eccentric(double u, double e) {
  return u - e * std::sin(u);
}

double solve_kepler(double mean_anomaly, double e, double tol) {
  require_elliptic(e);
  if (!(tol >= 1e-15)) {
    throw DomainError("solve_kepler: tol must be at least 1e-15, got " +
                      std::to_string(tol));
  }
  if (e == 0.0) {
    return mean_anomaly;
  }

  const double s = std::sin(mean_anomaly);
  const double sign = s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
  double u = mean_anomaly + 0.85 * e * sign;
  for (int i = 0; i < 50; ++i) {
    const double f = u - e * std::sin(u) - mean_anomaly;
    if (std::abs(f) <= tol) {
      return u;
    }
    u -= f / (1.0 - e * std::cos(u));
  }

  // Newton failed to settle; the root is bracketed by |u - M| <= e.
  double lo = mean_anomaly - e;
  double hi = mean_anomaly + e;
  for (int i = 0; i < 200; ++i) {
    u = 0.5 * (lo + hi);
    const double f = u - e * std::sin(u) - mean_anomaly;
    if (std::abs(f) <= tol) {
      return u;
    }
    if (f < 0.0) {
      lo = u;
    } else {
      hi = u;
    }
  }
  throw ConvergenceError("solve_kepler: no convergence for M = " +
                         std::to_string(mean_anomaly) + ", e = " + std::to_string(e));
}

double mean_motion(const FirstIntegrals& integrals, const PhysParams& params) {
  if (!(integrals.E < 0.0)) {
    throw DomainError("mean_motion: requires a bound orbit (E < 0), got E = " +
                      std::to_string(integrals.E));
  }
  return 2.0 * std::sqrt(2.0) * std::pow(std::abs(integrals.E), 1.5) /
         (params.k * std::sqrt(params.m));
}

double orbital_period(const FirstIntegrals& integrals, const PhysParams& params) {
  return kTwoPi / mean_motion(integrals, params);
}

double epoch_from_anomaly(const OrbitFrame& frame, double nu, double t0, double nu0) {
  if (!(frame.integrals.E < 0.0)) {
    throw DomainError("epoch_from_anomaly: requires a bound orbit (E < 0)");
  }
  const double u = true_to_eccentric(nu, frame.e);
  const double u0 = true_to_eccentric(nu0, frame.e);
  const double mean = mean_from_eccentric(u, frame.e);
  const double mean0 = mean_from_eccentric(u0, frame.e);
  return t0 + (mean - mean0) / mean_motion(frame.integrals, frame.params);
}

double orbit_radius(const OrbitFrame& frame, double angle_from_periapsis) {
  const double inv_latus =
      frame.params.k * frame.params.m / norm_squared(frame.integrals.L);
  const double shape = 1.0 + frame.e * std::cos(angle_from_periapsis);
  if (!(shape > 0.0)) {
    throw DomainError("orbit_radius: 1 + e cos(angle) = " + std::to_string(shape) +
                      " is not positive (unbounded radius)");
  }
  return 1.0 / (inv_latus * shape);
}

}  // namespace kepler::anomaly
