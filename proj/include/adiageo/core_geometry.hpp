#pragma once

// Parameter-space geometry assembled from angle-sampled generator data:
// the covariance metric g_ij = <G_i G_j> - <G_i><G_j>, the connection
// A_i = <G_i>, and its curvature F_ij. One fast degree of freedom; angle
// averages use the uniform rectangle rule, exact for trig polynomials
// below the Nyquist harmonic of the grid.

#include <Eigen/Dense>

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace adiageo {

enum class ModelTag { gho, gho_linear, quartic, generic };

/// Named real parameter vector with a model-specific domain predicate.
/// Violating points are rejected at construction, never clamped.
class ParameterPoint {
 public:
  ParameterPoint(std::vector<std::string> names, std::vector<double> values,
                 ModelTag tag = ModelTag::generic);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<double>& values() const { return values_; }
  double value(int i) const { return values_.at(i); }
  double value(const std::string& name) const;
  ModelTag tag() const { return tag_; }

  std::string to_string() const;

 private:
  std::vector<std::string> names_;
  std::vector<double> values_;
  ModelTag tag_;
};

/// Values of the N generators G_i on a uniform angle grid
/// phi_j = 2*pi*j/M, j = 0..M-1 (one row per parameter).
struct GeneratorSamples {
  GeneratorSamples(int n_params, int grid_size);

  int n_params() const { return static_cast<int>(values.rows()); }
  int grid_size() const { return static_cast<int>(values.cols()); }

  Eigen::MatrixXd values;
};

/// Symmetric N x N metric tagged with its parameter point and action.
struct MetricTensor {
  Eigen::MatrixXd components;
  ParameterPoint point;
  double action;

  /// All eigenvalues >= -rel_tol * max|g|; roundoff-scale negatives from
  /// rank-deficient metrics are admitted by the relative tolerance.
  bool is_positive_semidefinite(double rel_tol = 1e-12) const;
  double min_eigenvalue() const;
};

/// Connection components A_i at (I; x).
struct OneForm {
  Eigen::VectorXd components;
  ParameterPoint point;
  double action;
};

/// Curvature components F_ij = -F_ji (antisymmetry exact by construction).
struct TwoForm {
  Eigen::MatrixXd components;
  ParameterPoint point;
  double action;
};

/// Mean over one period of uniformly spaced samples; exact for trig
/// polynomials whose highest harmonic is below the grid size.
double angle_average(std::span<const double> samples);
/// Jacobian-weighted mean (1/M) sum f_j w_j.
double angle_average(std::span<const double> samples, std::span<const double> weights);

MetricTensor metric_from_generators(const GeneratorSamples& gs,
                                    const ParameterPoint& point, double action);
MetricTensor metric_from_generators(const GeneratorSamples& gs,
                                    const ParameterPoint& point, double action,
                                    std::span<const double> weights);

/// Samples at M and 2M and rejects with "aliasing" when any metric
/// component moves by more than 1e-10 (harmonic content above Nyquist).
MetricTensor metric_from_sampler(const std::function<GeneratorSamples(int)>& sampler,
                                 int grid_size, const ParameterPoint& point,
                                 double action);

OneForm connection_from_generators(const GeneratorSamples& gs,
                                   const ParameterPoint& point, double action);

/// F_ij = <(d_i p)(d_j q) - (d_j p)(d_i q)> from N x M sample matrices of
/// the phase-space parameter derivatives at fixed (phi, I).
TwoForm curvature_from_phase_space_derivatives(const Eigen::MatrixXd& dp,
                                               const Eigen::MatrixXd& dq,
                                               const ParameterPoint& point,
                                               double action);

/// g'_ij = (dx^k/dy^i)(dx^l/dy^j) g_kl with jacobian(k, i) = dx^k/dy^i.
MetricTensor transform_metric(const MetricTensor& g, const Eigen::MatrixXd& jacobian);

/// Principal submatrix on the kept parameter indices.
MetricTensor restrict_metric(const MetricTensor& g, std::span<const int> kept);

/// Number of singular values above rel_tol times the largest.
int matrix_rank(const MetricTensor& g, double rel_tol = 1e-10);

}  // namespace adiageo
