#include <kepler/system.hpp>

#include <cmath>
#include <string>

namespace kepler {

void PhysParams::check() const {
  if (!(m > 0.0)) {
    throw DomainError("PhysParams.m must be positive, got " + std::to_string(m));
  }
  if (!(k > 0.0)) {
    throw DomainError("PhysParams.k must be positive, got " + std::to_string(k));
  }
}

namespace {

double checked_radius(const Vec3& q, double eps, const char* where) {
  const double r = norm(q);
  if (r < eps) {
    throw SingularOriginError(std::string(where) +
                              ": |q| = " + std::to_string(r) +
                              " is below the collision threshold");
  }
  return r;
}

}  // namespace

Derivatives kepler_rhs(const PhaseState& state, const PhysParams& params,
                       double origin_epsilon) {
  const double r = checked_radius(state.q, origin_epsilon, "kepler_rhs");
  return {state.p / params.m, (-params.k / (r * r * r)) * state.q};
}

Vec3 angular_momentum(const PhaseState& state) {
  return cross(state.q, state.p);
}

double energy(const PhaseState& state, const PhysParams& params) {
  const double r = checked_radius(state.q, kSingularRadius, "energy");
  return dot(state.p, state.p) / (2.0 * params.m) - params.k / r;
}

Vec3 lrl_vector(const PhaseState& state, const PhysParams& params) {
  const double r = checked_radius(state.q, kSingularRadius, "lrl_vector");
  return cross(state.p, angular_momentum(state)) / params.m -
         (params.k / r) * state.q;
}

FirstIntegrals first_integrals(const PhaseState& state, const PhysParams& params) {
  return {angular_momentum(state), energy(state, params), lrl_vector(state, params)};
}

double eccentricity(const FirstIntegrals& integrals, const PhysParams& params) {
  const double radicand =
      1.0 + 2.0 * integrals.E * norm_squared(integrals.L) / (params.m * params.k * params.k);
  if (radicand < -1e-9) {
    throw DomainError("eccentricity: radicand " + std::to_string(radicand) +
                      " is below -1e-9; inconsistent first integrals");
  }
  return std::sqrt(std::max(0.0, radicand));
}

}  // namespace kepler
