#pragma once

// Closed forms for the two exactly solvable models: the generalized harmonic
// oscillator H = (X q^2 + 2 Y q p + Z p^2)/2 and the same Hamiltonian with a
// linear term W q. Action-angle maps, generating functions, displacement
// generators G_i, and the printed metric / connection / curvature components.
//
// Parameter order is (X, Y, Z) for the plain model and (W, X, Y, Z) for the
// linear-term model; omega = sqrt(X Z - Y^2) > 0 on the admissible domain.

#include "adiageo/core_geometry.hpp"

#include <array>
#include <utility>

namespace adiageo {

struct PhaseState {
  double q = 0.0;
  double p = 0.0;
};

class GhoPoint {
 public:
  GhoPoint(double X, double Y, double Z);

  double X, Y, Z;
  double omega() const { return omega_; }
  ParameterPoint as_parameter_point() const;

 private:
  double omega_;
};

class GhoLinPoint {
 public:
  GhoLinPoint(double W, double X, double Y, double Z);

  double W, X, Y, Z;
  double omega() const { return omega_; }
  ParameterPoint as_parameter_point() const;
  GhoPoint quadratic_part() const { return GhoPoint(X, Y, Z); }

 private:
  double omega_;
};

/// Quartic oscillator point H = p^2/2m + k q^2/2 + lambda q^4/4!.
class QuarticPoint {
 public:
  QuarticPoint(double mass, double stiffness, double coupling);

  double mass, stiffness, coupling;
  double omega0() const { return omega0_; }
  ParameterPoint as_parameter_point() const;

 private:
  double omega0_;
};

// --- plain generalized harmonic oscillator ---------------------------------

PhaseState gho_action_angle_map(double phi, double action, const GhoPoint& x);
/// Generating function S(phi, I; x) of (q,p) -> (phi,I), single-valued on
/// one chart; S(phi + 2*pi) - S(phi) = 2*pi*I.
double gho_generating_function(double phi, double action, const GhoPoint& x);
std::array<double, 3> gho_generators(double phi, double action, const GhoPoint& x);
GeneratorSamples sample_gho_generators(double action, const GhoPoint& x, int grid_size);

/// Shared factorization: metric = I^2 * base, quantum metric = (n^2+n+1) * base.
Eigen::Matrix3d gho_metric_base(const GhoPoint& x);
/// connection = I * base resp. (n + 1/2) * base.
Eigen::Vector3d gho_connection_base(const GhoPoint& x);
Eigen::Matrix3d gho_curvature_base(const GhoPoint& x);

MetricTensor gho_metric_closed(double action, const GhoPoint& x);
std::pair<OneForm, TwoForm> gho_hannay(double action, const GhoPoint& x);
/// d g_ij / dI at (I; x).
Eigen::Matrix3d gho_metric_dI(double action, const GhoPoint& x);

// --- generalized harmonic oscillator with a linear term --------------------

PhaseState gholin_action_angle_map(double phi, double action, const GhoLinPoint& x);
double gholin_generating_function(double phi, double action, const GhoLinPoint& x);

/// Coefficient functions of the compact phase-space form
/// G_i = f_i q p + g_i q^2 + h_i (p + (Y/Z) q), indices (W, X, Y, Z).
struct GeneratorCoeffs {
  std::array<double, 4> f, g, h;
};
GeneratorCoeffs gholin_generator_coeffs(const GhoLinPoint& x);
/// G_i as a function of phase space, for the canonical-transformation checks.
double gholin_generator_phase_space(int i, double q, double p, const GhoLinPoint& x);

std::array<double, 4> gholin_generators(double phi, double action, const GhoLinPoint& x);
GeneratorSamples sample_gholin_generators(double action, const GhoLinPoint& x,
                                          int grid_size);

/// metric = I^2 * base1 + I * base2 (quantum: (n^2+n+1), (n+1/2)/hbar).
std::pair<Eigen::Matrix4d, Eigen::Matrix4d> gholin_metric_bases(const GhoLinPoint& x);
std::pair<Eigen::Vector4d, Eigen::Vector4d> gholin_connection_bases(const GhoLinPoint& x);
std::pair<Eigen::Matrix4d, Eigen::Matrix4d> gholin_curvature_bases(const GhoLinPoint& x);

MetricTensor gholin_metric_closed(double action, const GhoLinPoint& x);
std::pair<OneForm, TwoForm> gholin_hannay(double action, const GhoLinPoint& x);
Eigen::Matrix4d gholin_metric_dI(double action, const GhoLinPoint& x);

}  // namespace adiageo
