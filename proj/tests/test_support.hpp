#pragma once

// Shared helpers for the unit tests: seeded random model points and small
// finite-difference stencils.

#include "adiageo/models.hpp"

#include <functional>
#include <random>

namespace testsupport {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline adiageo::GhoPoint random_gho(Rng& rng, double min_disc = 0.1) {
  for (;;) {
    const double X = uniform(rng, 0.5, 2.0);
    const double Z = uniform(rng, 0.5, 2.0);
    const double Y = uniform(rng, -0.7, 0.7);
    if (X * Z - Y * Y >= min_disc) return adiageo::GhoPoint(X, Y, Z);
  }
}

inline adiageo::GhoLinPoint random_gholin(Rng& rng, double min_disc = 0.1) {
  const adiageo::GhoPoint q = random_gho(rng, min_disc);
  return adiageo::GhoLinPoint(uniform(rng, -1.5, 1.5), q.X, q.Y, q.Z);
}

inline double central_diff(const std::function<double(double)>& f, double x,
                           double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace testsupport
