#pragma once

// Brute-force verification layer, independent of the closed forms it checks:
// finite-difference tests of the canonical-displacement equations, metric
// assembly from sampled generators, gauge-shift experiments, slow-ramp
// integration of Hamilton's equations, and the action integral I(E).

#include "adiageo/core_geometry.hpp"
#include "adiageo/models.hpp"

#include <functional>
#include <vector>

namespace adiageo::oracle {

enum class Model { gho, gho_linear };

/// Worst absolute error over all parameter indices of
/// (d_i q)_{phi,I} vs dG_i/dp and (d_i p)_{phi,I} vs -dG_i/dq, both sides by
/// central differences (parameter step 1e-5*(1+|x_i|), phase-space step
/// 1e-5*(1+|q|)). A stencil leaving the domain shrinks the step once.
double generator_displacement_check(Model model, double phi, double action,
                                    const std::vector<double>& params);

/// Metric from sampled closed-form generators with the doubling-grid
/// aliasing guard.
MetricTensor numeric_metric(Model model, double action,
                            const std::vector<double>& params, int grid_size);
/// Quartic variant (series generators, Jacobian weight, order-matched).
MetricTensor numeric_metric_quartic(double action, const QuarticPoint& x,
                                    int grid_size);

/// Angle-origin shift lambda(I; x) = c1 I^2 + c2 I x_j.
struct GaugeShift {
  double c1 = 0.0;
  double c2 = 0.0;
  int param_index = 0;  // the x_j entering the c2 term
};

struct GaugeExperimentResult {
  /// max |g' - g| after recomputing from shifted generators (gauge artifact,
  /// should vanish).
  double metric_deviation;
  /// max |<G'_i G'_j> - <G_i G_j>| (the raw second moment is not invariant).
  double raw_term_deviation;
};

GaugeExperimentResult gauge_invariance_experiment(Model model,
                                                  const GaugeShift& shift,
                                                  double action,
                                                  const std::vector<double>& params,
                                                  int grid_size = 64);

/// Slow parameter ramp with C^1 smoothstep interpolation in t/T.
struct RampSchedule {
  std::vector<double> start;
  std::vector<double> end;
  double total_time = 0.0;

  std::vector<double> at(double t) const;
};

/// Integrates Hamilton's equations with fixed-step RK4 along the ramp and
/// returns max |I(t) - I(0)| / I(0), the adiabatic-invariance defect.
/// steps_per_period >= 200 keeps the integrator error subdominant.
double adiabatic_action_drift(Model model, const RampSchedule& ramp,
                              PhaseState initial, int steps_per_period = 200);

/// Max |H(t) - H(0)| / |H(0)| for frozen parameters; isolates the RK4 error
/// for the step-scaling check.
double frozen_energy_drift(Model model, const std::vector<double>& params,
                           PhaseState initial, double total_time,
                           double dt);

/// Same drift for the (nonlinear) quartic flow.
double quartic_frozen_energy_drift(const QuarticPoint& x, PhaseState initial,
                                   double total_time, double dt);

/// Final state after integrating frozen parameters with RK4; the global
/// trajectory error against the exact action-angle solution is the O(dt^4)
/// certificate of the integrator order (the energy error of these flows
/// decays one order faster, see the step-scaling checks).
PhaseState integrate_frozen(Model model, const std::vector<double>& params,
                            PhaseState initial, double total_time, double dt);

/// I(E) = (1/pi) int_{q_-}^{q_+} sqrt(2 m (E - V(q))) dq with turning points
/// by bisection (1e-12 relative) and the square-root endpoints removed by a
/// sine substitution on each half interval (Gauss-Legendre inside).
double numeric_action_of_energy(const std::function<double(double)>& potential,
                                double mass, double energy);

}  // namespace adiageo::oracle
