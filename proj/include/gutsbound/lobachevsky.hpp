#pragma once

#include "gutsbound/errors.hpp"

namespace gutsbound::numerics {

struct Angle {
  double radians;
};

// Lobachevsky function Lambda(theta) = -int_0^theta ln|2 sin t| dt,
// evaluated from its log-sine series after reduction mod pi into
// (-pi/2, pi/2]:
//
//   Lambda(t) = t - t ln|2t| + sum_{n>=1} zeta(2n) t^(2n+1) / (n (2n+1) pi^(2n))
//
// Terms are added until one falls below tolerance/10; exceeding max_terms
// first throws NonConvergence.
double lobachevsky(Angle theta, double tolerance = 1e-12, int max_terms = 64);

inline double lobachevsky(double radians, double tolerance = 1e-12, int max_terms = 64) {
  return lobachevsky(Angle{radians}, tolerance, max_terms);
}

// Volume of the regular ideal hyperbolic octahedron, 8 * Lambda(pi/4).
// Computed once, then cached.
double v8();

// zeta(2n) for 1 <= n <= 32 (series coefficients; exposed for tests).
double zeta_even(int n);

}  // namespace gutsbound::numerics
