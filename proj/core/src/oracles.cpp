#include "latsum/oracles.hpp"

#include <array>
#include <cmath>

#include "latsum/errors.hpp"

namespace latsum {

BigFloat instanton_slope(const BigFloat& epsilon) {
  if (epsilon.sign() <= 0) throw NonPositiveEpsilon("instanton_slope: epsilon must be positive");
  const mpfr_prec_t prec = epsilon.precision();
  return BigFloat::of(1L, prec) / (epsilon * sqrt(BigFloat::of(2L, prec)));
}

namespace {

using State = std::array<double, 3>;  // y, y', y''

State rhs(const State& u, double epsilon) {
  return State{u[1], u[2], -u[0] * u[2] / (2.0 * epsilon)};
}

State axpy(const State& u, const State& v, double h) {
  return State{u[0] + h * v[0], u[1] + h * v[1], u[2] + h * v[2]};
}

/// y'(L) for initial slope-curvature s, classical RK4 with fixed step.
double integrate(double s, const ShootingConfig& cfg, long steps) {
  State u{0.0, 0.0, s};
  const double h = cfg.step;
  for (long i = 0; i < steps; ++i) {
    const State k1 = rhs(u, cfg.epsilon);
    const State k2 = rhs(axpy(u, k1, h / 2), cfg.epsilon);
    const State k3 = rhs(axpy(u, k2, h / 2), cfg.epsilon);
    const State k4 = rhs(axpy(u, k3, h), cfg.epsilon);
    for (int c = 0; c < 3; ++c) {
      u[static_cast<std::size_t>(c)] +=
          h / 6 * (k1[static_cast<std::size_t>(c)] + 2 * k2[static_cast<std::size_t>(c)] +
                   2 * k3[static_cast<std::size_t>(c)] + k4[static_cast<std::size_t>(c)]);
    }
  }
  return u[1];
}

}  // namespace

BigFloat blasius_shoot(const ShootingConfig& cfg) {
  if (cfg.epsilon <= 0) throw NonPositiveEpsilon("blasius_shoot: epsilon must be positive");
  if (cfg.step <= 0 || cfg.domain_length <= 0 || cfg.tolerance <= 0) {
    throw Error("blasius_shoot: invalid configuration");
  }
  const double ratio = cfg.domain_length / cfg.step;
  const long steps = std::lround(ratio);
  if (std::fabs(ratio - static_cast<double>(steps)) > 1e-9) {
    throw Error("blasius_shoot: L/h must be integral");
  }

  // Secant seeds bracketing the continuum value after 1/sqrt(eps) scaling.
  double s0 = 0.2 / std::sqrt(cfg.epsilon);
  double s1 = 0.5 / std::sqrt(cfg.epsilon);
  double g0 = integrate(s0, cfg, steps) - 1.0;
  double g1 = integrate(s1, cfg, steps) - 1.0;
  if (std::fabs((g1 - g0) / (s1 - s0)) < cfg.sensitivity_threshold) {
    throw DomainTooShort("blasius_shoot: y'(L) insensitive to the shooting parameter");
  }
  for (int it = 0; it < cfg.max_iterations; ++it) {
    if (std::fabs(g1) < cfg.tolerance) return BigFloat::of(s1);
    const double denom = g1 - g0;
    if (denom == 0) break;
    const double s2 = s1 - g1 * (s1 - s0) / denom;
    s0 = s1;
    g0 = g1;
    s1 = s2;
    g1 = integrate(s1, cfg, steps) - 1.0;
  }
  throw NoConvergence("blasius_shoot: secant iteration did not converge");
}

}  // namespace latsum
