#include "adiageo/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adiageo {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

GhoPoint::GhoPoint(double X_, double Y_, double Z_) : X(X_), Y(Y_), Z(Z_) {
  // constructing the ParameterPoint runs the domain predicate
  (void)ParameterPoint({"X", "Y", "Z"}, {X, Y, Z}, ModelTag::gho);
  omega_ = std::sqrt(X * Z - Y * Y);
}

ParameterPoint GhoPoint::as_parameter_point() const {
  return ParameterPoint({"X", "Y", "Z"}, {X, Y, Z}, ModelTag::gho);
}

GhoLinPoint::GhoLinPoint(double W_, double X_, double Y_, double Z_)
    : W(W_), X(X_), Y(Y_), Z(Z_) {
  (void)ParameterPoint({"W", "X", "Y", "Z"}, {W, X, Y, Z}, ModelTag::gho_linear);
  omega_ = std::sqrt(X * Z - Y * Y);
}

ParameterPoint GhoLinPoint::as_parameter_point() const {
  return ParameterPoint({"W", "X", "Y", "Z"}, {W, X, Y, Z}, ModelTag::gho_linear);
}

QuarticPoint::QuarticPoint(double mass_, double stiffness_, double coupling_)
    : mass(mass_), stiffness(stiffness_), coupling(coupling_) {
  (void)ParameterPoint({"m", "k", "lambda"}, {mass, stiffness, coupling},
                       ModelTag::quartic);
  omega0_ = std::sqrt(stiffness / mass);
}

ParameterPoint QuarticPoint::as_parameter_point() const {
  return ParameterPoint({"m", "k", "lambda"}, {mass, stiffness, coupling},
                        ModelTag::quartic);
}

// --- plain model ------------------------------------------------------------

PhaseState gho_action_angle_map(double phi, double action, const GhoPoint& x) {
  const double w = x.omega();
  const double amp = std::sqrt(2.0 * x.Z * action / w);
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  return {amp * s, amp * (-(x.Y / x.Z) * s + (w / x.Z) * c)};
}

double gho_generating_function(double phi, double action, const GhoPoint& x) {
  const double w = x.omega();
  const double s = std::sin(phi);
  return -(x.Y * action / w) * s * s + action * (phi + s * std::cos(phi));
}

std::array<double, 3> gho_generators(double phi, double action, const GhoPoint& x) {
  const double w = x.omega();
  const double w2 = w * w;
  const double s = std::sin(phi);
  const double c = std::cos(phi);
  const double g1 = -(x.Z * action / (2.0 * w2)) * s * c;
  const double g2 = (action * s / w2) * (x.Y * c + w * s);
  const double g3 = (action * s / (2.0 * x.Z * w2)) *
                    ((x.X * x.Z - 2.0 * x.Y * x.Y) * c - 2.0 * x.Y * w * s);
  return {g1, g2, g3};
}

GeneratorSamples sample_gho_generators(double action, const GhoPoint& x,
                                       int grid_size) {
  GeneratorSamples gs(3, grid_size);
  for (int j = 0; j < grid_size; ++j) {
    const double phi = kTwoPi * j / grid_size;
    const auto g = gho_generators(phi, action, x);
    for (int i = 0; i < 3; ++i) gs.values(i, j) = g[i];
  }
  return gs;
}

Eigen::Matrix3d gho_metric_base(const GhoPoint& x) {
  const double w = x.omega();
  const double f = 1.0 / (32.0 * w * w * w * w);
  Eigen::Matrix3d b;
  b << x.Z * x.Z, -2.0 * x.Y * x.Z, 2.0 * x.Y * x.Y - x.X * x.Z,
      -2.0 * x.Y * x.Z, 4.0 * x.X * x.Z, -2.0 * x.X * x.Y,
      2.0 * x.Y * x.Y - x.X * x.Z, -2.0 * x.X * x.Y, x.X * x.X;
  return f * b;
}

Eigen::Vector3d gho_connection_base(const GhoPoint& x) {
  const double w = x.omega();
  return Eigen::Vector3d(0.0, 1.0 / (2.0 * w), -x.Y / (2.0 * x.Z * w));
}

Eigen::Matrix3d gho_curvature_base(const GhoPoint& x) {
  const double w = x.omega();
  const double f = 1.0 / (4.0 * w * w * w);
  Eigen::Matrix3d b;
  b << 0.0, -x.Z, x.Y,
      x.Z, 0.0, -x.X,
      -x.Y, x.X, 0.0;
  return f * b;
}

MetricTensor gho_metric_closed(double action, const GhoPoint& x) {
  return MetricTensor{(action * action) * gho_metric_base(x),
                      x.as_parameter_point(), action};
}

std::pair<OneForm, TwoForm> gho_hannay(double action, const GhoPoint& x) {
  const ParameterPoint pt = x.as_parameter_point();
  return {OneForm{action * gho_connection_base(x), pt, action},
          TwoForm{action * gho_curvature_base(x), pt, action}};
}

Eigen::Matrix3d gho_metric_dI(double action, const GhoPoint& x) {
  return (2.0 * action) * gho_metric_base(x);
}

// --- linear-term model ------------------------------------------------------

PhaseState gholin_action_angle_map(double phi, double action, const GhoLinPoint& x) {
  const auto base = gho_action_angle_map(phi, action, x.quadratic_part());
  const double w2 = x.omega() * x.omega();
  return {base.q - x.W * x.Z / w2, base.p + x.W * x.Y / w2};
}

double gholin_generating_function(double phi, double action, const GhoLinPoint& x) {
  const double s = std::sin(phi);
  const double q = gholin_action_angle_map(phi, action, x).q;
  return -(x.Y / (2.0 * x.Z)) * q * q + action * (phi + s * std::cos(phi));
}

GeneratorCoeffs gholin_generator_coeffs(const GhoLinPoint& x) {
  const double w = x.omega();
  const double w2 = w * w;
  const double w4 = w2 * w2;
  // d(Z/omega)/dx_i and d(Y/Z)/dx_i in the order (W, X, Y, Z)
  const std::array<double, 4> dZow = {0.0, -x.Z * x.Z / (2.0 * w2 * w),
                                      x.Y * x.Z / (w2 * w),
                                      (x.X * x.Z - 2.0 * x.Y * x.Y) / (2.0 * w2 * w)};
  const std::array<double, 4> dYoZ = {0.0, 0.0, 1.0 / x.Z, -x.Y / (x.Z * x.Z)};
  // d(W Z / omega^2)/dx_i
  const std::array<double, 4> dWZow2 = {x.Z / w2, -x.W * x.Z * x.Z / w4,
                                        2.0 * x.W * x.Y * x.Z / w4,
                                        -x.W * x.Y * x.Y / w4};
  GeneratorCoeffs c;
  for (int i = 0; i < 4; ++i) {
    c.f[i] = (w / (2.0 * x.Z)) * dZow[i];
    c.g[i] = (x.Y / x.Z) * c.f[i] + 0.5 * dYoZ[i];
    c.h[i] = (x.W / (2.0 * w)) * dZow[i] - dWZow2[i];
  }
  return c;
}

double gholin_generator_phase_space(int i, double q, double p, const GhoLinPoint& x) {
  const GeneratorCoeffs c = gholin_generator_coeffs(x);
  return c.f[i] * q * p + c.g[i] * q * q + c.h[i] * (p + (x.Y / x.Z) * q);
}

std::array<double, 4> gholin_generators(double phi, double action,
                                        const GhoLinPoint& x) {
  const GeneratorCoeffs c = gholin_generator_coeffs(x);
  const PhaseState s = gholin_action_angle_map(phi, action, x);
  std::array<double, 4> g;
  for (int i = 0; i < 4; ++i)
    g[i] = c.f[i] * s.q * s.p + c.g[i] * s.q * s.q +
           c.h[i] * (s.p + (x.Y / x.Z) * s.q);
  return g;
}

GeneratorSamples sample_gholin_generators(double action, const GhoLinPoint& x,
                                          int grid_size) {
  GeneratorSamples gs(4, grid_size);
  for (int j = 0; j < grid_size; ++j) {
    const double phi = kTwoPi * j / grid_size;
    const auto g = gholin_generators(phi, action, x);
    for (int i = 0; i < 4; ++i) gs.values(i, j) = g[i];
  }
  return gs;
}

std::pair<Eigen::Matrix4d, Eigen::Matrix4d> gholin_metric_bases(const GhoLinPoint& x) {
  const double w = x.omega();
  const double w2 = w * w;
  const double w4 = w2 * w2;
  const double w7 = w4 * w2 * w;
  const double W = x.W, X = x.X, Y = x.Y, Z = x.Z;

  Eigen::Matrix4d b1 = Eigen::Matrix4d::Zero();
  b1.block<3, 3>(1, 1) = gho_metric_base(x.quadratic_part());

  Eigen::Matrix4d b2;
  b2 << Z * w4, -W * Z * Z * w2, 2.0 * W * Y * Z * w2, -W * Y * Y * w2,
      -W * Z * Z * w2, W * W * Z * Z * Z, -2.0 * W * W * Y * Z * Z, W * W * Y * Y * Z,
      2.0 * W * Y * Z * w2, -2.0 * W * W * Y * Z * Z,
      W * W * Z * (3.0 * Y * Y + X * Z), -W * W * Y * (Y * Y + X * Z),
      -W * Y * Y * w2, W * W * Y * Y * Z, -W * W * Y * (Y * Y + X * Z),
      W * W * X * Y * Y;
  b2 /= w7;
  return {b1, b2};
}

std::pair<Eigen::Vector4d, Eigen::Vector4d> gholin_connection_bases(
    const GhoLinPoint& x) {
  const double w = x.omega();
  const double w4 = w * w * w * w;
  Eigen::Vector4d b1 = Eigen::Vector4d::Zero();
  b1.tail<3>() = gho_connection_base(x.quadratic_part());
  Eigen::Vector4d b2(0.0, 0.0, x.W * x.W * x.Z / (2.0 * w4),
                     -x.W * x.W * x.Y / (2.0 * w4));
  return {b1, b2};
}

std::pair<Eigen::Matrix4d, Eigen::Matrix4d> gholin_curvature_bases(
    const GhoLinPoint& x) {
  const double w = x.omega();
  const double w2 = w * w;
  const double w6 = w2 * w2 * w2;
  const double W = x.W, Y = x.Y, Z = x.Z;

  Eigen::Matrix4d b1 = Eigen::Matrix4d::Zero();
  b1.block<3, 3>(1, 1) = gho_curvature_base(x.quadratic_part());

  Eigen::Matrix4d b2;
  b2 << 0.0, 0.0, W * Z * w2, -W * Y * w2,
      0.0, 0.0, -W * W * Z * Z, W * W * Y * Z,
      -W * Z * w2, W * W * Z * Z, 0.0, -W * W * Y * Y,
      W * Y * w2, -W * W * Y * Z, W * W * Y * Y, 0.0;
  b2 /= w6;
  return {b1, b2};
}

MetricTensor gholin_metric_closed(double action, const GhoLinPoint& x) {
  const auto [b1, b2] = gholin_metric_bases(x);
  return MetricTensor{(action * action) * b1 + action * b2,
                      x.as_parameter_point(), action};
}

std::pair<OneForm, TwoForm> gholin_hannay(double action, const GhoLinPoint& x) {
  const auto [a1, a2] = gholin_connection_bases(x);
  const auto [k1, k2] = gholin_curvature_bases(x);
  const ParameterPoint pt = x.as_parameter_point();
  return {OneForm{action * a1 + a2, pt, action},
          TwoForm{action * k1 + k2, pt, action}};
}

Eigen::Matrix4d gholin_metric_dI(double action, const GhoLinPoint& x) {
  const auto [b1, b2] = gholin_metric_bases(x);
  return (2.0 * action) * b1 + b2;
}

}  // namespace adiageo
