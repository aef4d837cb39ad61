#pragma once

#include "latsum/bigfloat.hpp"

namespace latsum {

/// Continuum instanton slope f'(0) = 1/(epsilon sqrt(2)).
BigFloat instanton_slope(const BigFloat& epsilon);

struct ShootingConfig {
  double epsilon = 1.0;
  double domain_length = 10.0;   // L; the layer thickness is O(sqrt(epsilon))
  double step = 1e-3;            // fixed RK4 step; L/step must be integral
  double tolerance = 1e-12;      // secant convergence on y'(L) - 1
  int max_iterations = 100;
  double sensitivity_threshold = 1.0;  // min |d y'(L) / d s| for a contained layer
};

/// y''(0) for 2 eps y''' + y y'' = 0, y(0) = y'(0) = 0, y'(inf) = 1, by
/// fixed-step fourth-order integration over [0, L] and secant shooting on
/// s = y''(0).  Throws NoConvergence at the iteration cap and DomainTooShort
/// when y'(L) is insensitive to s.
BigFloat blasius_shoot(const ShootingConfig& config);

}  // namespace latsum
