#pragma once

// Canonical perturbation theory for the quartic anharmonic oscillator
// H = p^2/2m + k q^2/2 + lambda q^4/4!, carried to third order in lambda
// with exact rational coefficients: generating functions W_1..W_3 from the
// homological equations, displacement generators G_i (i <-> m, k, lambda)
// through second order, and the classical metric series assembled with the
// Jacobian-weighted angle average <f> = (1/2pi) int f (dphi/dphi_0) dphi_0.

#include "adiageo/core_geometry.hpp"
#include "adiageo/models.hpp"
#include "adiageo/trig_series.hpp"

#include <array>
#include <vector>

namespace adiageo::quartic {

using series::CoefficientPoly;
using series::PerturbationSeries;
using series::TrigSeries;

struct PipelineResult {
  /// Phi_1..Phi_3, right-hand sides of the homological equations.
  std::array<TrigSeries, 3> phi;
  /// W_1..W_3 with zero angle average.
  std::array<TrigSeries, 3> w;
  /// Generators G_i in terms of (phi_0, I), truncated at lambda^2;
  /// index 0 <-> m, 1 <-> k, 2 <-> lambda.
  std::array<PerturbationSeries, 3> generators;
  /// dphi/dphi_0, exact polynomial of degree 3 in lambda.
  PerturbationSeries jacobian;
  /// Upper-triangle metric components (mm, mk, ml, kk, kl, ll), each a
  /// per-lambda-order coefficient list truncated at lambda^2.
  std::array<std::vector<CoefficientPoly>, 6> metric;
  /// Same covariance without truncation (orders 0..7): the exact
  /// weighted covariance of the degree-2 generator polynomials.
  std::array<std::vector<CoefficientPoly>, 6> metric_full;
  /// Energy E(I) = omega_0 I + sum_mu lambda^mu <Phi_mu>, orders 0..3.
  std::vector<CoefficientPoly> energy;
};

/// Runs the fixed third-order pipeline once and caches the result.
const PipelineResult& pipeline();

/// Position of component (i, j) in the packed upper triangle.
int component_index(int i, int j);

/// Evaluated lambda^2-truncated metric series at (I; m, k, lambda).
MetricTensor metric_closed(double action, const QuarticPoint& x);

/// Evaluated energy series E(I) at (I; m, k, lambda).
double energy_of_action(double action, const QuarticPoint& x);

/// Weighted covariance of the generator samples assembled order-by-order
/// in lambda on an M-point angle grid (numerical averages, truncation
/// matching the closed series).
MetricTensor numeric_metric(double action, const QuarticPoint& x, int grid_size);

/// Plain weighted covariance of the lambda-evaluated generator samples
/// (full product, all cross orders); matches metric_full evaluation.
MetricTensor numeric_metric_full_product(double action, const QuarticPoint& x,
                                         int grid_size);

double eval_metric_component(const std::vector<CoefficientPoly>& component,
                             double action, double mass, double stiffness,
                             double coupling);

}  // namespace adiageo::quartic
