#pragma once

// Quantum side of every comparison: closed-form quantum metric tensors and
// Berry connections/curvatures for the oscillator models, the operator form
// built from the promoted displacement generators, the perturbative quartic
// ground state, and a generic wavefunction-overlap metric computed by
// quadrature plus parameter finite differences.

#include "adiageo/core_geometry.hpp"
#include "adiageo/models.hpp"
#include "adiageo/trig_series.hpp"

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace adiageo::quantum {

struct QuantumLevel {
  int n = 0;
  double hbar = 1.0;
};

// --- closed forms -----------------------------------------------------------

MetricTensor gho_quantum_metric(const QuantumLevel& lv, const GhoPoint& x);
std::pair<OneForm, TwoForm> gho_berry(const QuantumLevel& lv, const GhoPoint& x);
/// d g^(n)_ij / dn (treating n as continuous), for the Bohr-Sommerfeld
/// cross-check against (1/hbar) d g_ij / dI.
Eigen::Matrix3d gho_quantum_metric_dn(const QuantumLevel& lv, const GhoPoint& x);

MetricTensor gholin_quantum_metric(const QuantumLevel& lv, const GhoLinPoint& x);
std::pair<OneForm, TwoForm> gholin_berry(const QuantumLevel& lv, const GhoLinPoint& x);
Eigen::Matrix4d gholin_quantum_metric_dn(const QuantumLevel& lv, const GhoLinPoint& x);

/// Metric and Berry connection from the expectation values of the promoted
/// generator operators (symmetrised q p ordering), via the closed form in
/// the coefficient functions f_i, l_i = g_i - (Y/Z) f_i and
/// m_i = h_i - (W Z / omega^2) f_i.
std::pair<MetricTensor, OneForm> operator_metric_and_connection(
    const QuantumLevel& lv, const GhoLinPoint& x);

// --- wavefunctions and the overlap oracle -----------------------------------

/// Normalized wavefunction of one coordinate, parameterized by the model's
/// parameter vector, plus a recommended quadrature window.
struct WavefunctionSampler {
  std::function<std::complex<double>(double q, const std::vector<double>& params)> psi;
  /// (center, half width) of the quadrature window for given parameters.
  std::function<std::pair<double, double>(const std::vector<double>& params)> window;
  int nodes = 2001;  // composite-Simpson nodes (forced odd)
};

/// Eigenstate n of the generalized harmonic oscillator; params = (X, Y, Z).
WavefunctionSampler gho_wavefunction(int n, double hbar);
/// Same with the linear term; params = (W, X, Y, Z).
WavefunctionSampler gholin_wavefunction(int n, double hbar);

struct QuarticGroundState {
  WavefunctionSampler sampler;
  double energy;
  /// Dimensionless coupling hbar*lambda / (12 m^2 omega_0^3).
  double lambda_scale;
  /// False once lambda_scale > 0.1: the truncated state turns negative
  /// near the origin and the perturbative regime is exceeded.
  bool perturbative;
};

/// Perturbative ground state (third order) and its energy; params of the
/// sampler = (m, k, lambda) so the metric oracle can step all three.
QuarticGroundState quartic_ground_state(const QuarticPoint& x, double hbar);

double quartic_ground_energy(const QuarticPoint& x, double hbar);
/// Same energy through the dimensionless eigenvalue
/// eps = 1 + (3/4) L - (21/16) L^2 + (333/64) L^3, E = eps * hbar * omega_0 / 2.
double quartic_ground_energy_dimensionless(const QuarticPoint& x, double hbar);

/// Overlap metric Re(<d_i n|d_j n> - <d_i n|n><n|d_j n>) with derivatives by
/// central parameter differences (step 1e-4 * (1 + |x_i|) unless given) and
/// overlaps by composite Simpson quadrature on the sampler's window.
/// Throws "window too small" when the norm drifts across a parameter step.
MetricTensor quantum_metric_numeric(const WavefunctionSampler& sampler,
                                    const ParameterPoint& x,
                                    std::vector<double> steps = {});

/// The lambda^2-truncated ground-state quantum metric of the quartic model.
MetricTensor quartic_quantum_metric_closed(const QuarticPoint& x, double hbar);

/// One (component, lambda-order) ratio between the classical and quantum
/// quartic metric series: I^action_power = ratio * hbar^action_power.
struct IdentificationEntry {
  int i, j;
  int lambda_order;
  int action_power;
  series::Rational ratio;
};

/// All 18 component/order ratios; both series have identical (m, k)
/// dependence per entry (checked), so the ratio is an exact rational.
std::vector<IdentificationEntry> quartic_identification_table();

}  // namespace adiageo::quantum
