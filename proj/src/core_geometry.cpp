#include "adiageo/core_geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace adiageo {

namespace {

void check_domain(const std::vector<std::string>& names,
                  const std::vector<double>& v, ModelTag tag) {
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("domain violation: " + what);
  };
  switch (tag) {
    case ModelTag::gho: {
      if (v.size() != 3) fail("gho point needs (X, Y, Z)");
      const double disc = v[0] * v[2] - v[1] * v[1];
      if (!(disc > 0)) {
        std::ostringstream os;
        os << "X*Z - Y^2 = " << disc << " must be positive";
        fail(os.str());
      }
      break;
    }
    case ModelTag::gho_linear: {
      if (v.size() != 4) fail("linear-term point needs (W, X, Y, Z)");
      const double disc = v[1] * v[3] - v[2] * v[2];
      if (!(disc > 0)) {
        std::ostringstream os;
        os << "X*Z - Y^2 = " << disc << " must be positive";
        fail(os.str());
      }
      if (v[3] == 0) fail("Z must be nonzero");
      break;
    }
    case ModelTag::quartic: {
      if (v.size() != 3) fail("quartic point needs (m, k, lambda)");
      if (!(v[0] > 0)) fail("m must be positive");
      if (!(v[1] > 0)) fail("k must be positive");
      if (!(v[2] >= 0)) fail("lambda must be nonnegative");
      break;
    }
    case ModelTag::generic:
      break;
  }
  (void)names;
}

// Symmetric covariance of the sample rows under a common weight.
Eigen::MatrixXd weighted_covariance(const Eigen::MatrixXd& rows,
                                    std::span<const double> weights) {
  const int n = static_cast<int>(rows.rows());
  const int m = static_cast<int>(rows.cols());
  Eigen::VectorXd mean(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += rows(i, j) * weights[j];
    mean(i) = s / m;
  }
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int c = 0; c < m; ++c) s += rows(i, c) * rows(j, c) * weights[c];
      const double v = s / m - mean(i) * mean(j);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

const std::vector<double>& unit_weights(int m) {
  static thread_local std::vector<double> w;
  if (static_cast<int>(w.size()) != m) w.assign(m, 1.0);
  return w;
}

}  // namespace

ParameterPoint::ParameterPoint(std::vector<std::string> names,
                               std::vector<double> values, ModelTag tag)
    : names_(std::move(names)), values_(std::move(values)), tag_(tag) {
  if (names_.size() != values_.size())
    throw std::invalid_argument("parameter names/values length mismatch");
  for (double v : values_)
    if (!std::isfinite(v)) throw std::invalid_argument("nonfinite parameter value");
  check_domain(names_, values_, tag_);
}

double ParameterPoint::value(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return values_[i];
  throw std::out_of_range("no parameter named " + name);
}

std::string ParameterPoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < names_.size(); ++i) {
    if (i) os << ", ";
    os << names_[i] << "=" << values_[i];
  }
  os << ")";
  return os.str();
}

GeneratorSamples::GeneratorSamples(int n_params, int grid_size)
    : values(Eigen::MatrixXd::Zero(n_params, grid_size)) {
  if (n_params < 1) throw std::invalid_argument("need at least one generator");
  if (grid_size < 1) throw std::invalid_argument("empty grid");
}

bool MetricTensor::is_positive_semidefinite(double rel_tol) const {
  const double scale = components.cwiseAbs().maxCoeff();
  return min_eigenvalue() >= -rel_tol * scale;
}

double MetricTensor::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(components,
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double angle_average(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("empty grid");
  double s = 0.0;
  for (double v : samples) s += v;
  return s / static_cast<double>(samples.size());
}

double angle_average(std::span<const double> samples,
                     std::span<const double> weights) {
  if (samples.empty()) throw std::invalid_argument("empty grid");
  if (samples.size() != weights.size())
    throw std::invalid_argument("shape mismatch");
  double s = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) s += samples[i] * weights[i];
  return s / static_cast<double>(samples.size());
}

MetricTensor metric_from_generators(const GeneratorSamples& gs,
                                    const ParameterPoint& point, double action) {
  const auto& w = unit_weights(gs.grid_size());
  return metric_from_generators(gs, point, action, w);
}

MetricTensor metric_from_generators(const GeneratorSamples& gs,
                                    const ParameterPoint& point, double action,
                                    std::span<const double> weights) {
  if (gs.grid_size() == 0) throw std::invalid_argument("empty grid");
  if (gs.n_params() != point.size())
    throw std::invalid_argument("shape mismatch: generators vs parameters");
  if (static_cast<int>(weights.size()) != gs.grid_size())
    throw std::invalid_argument("shape mismatch: weights vs grid");
  return MetricTensor{weighted_covariance(gs.values, weights), point, action};
}

MetricTensor metric_from_sampler(const std::function<GeneratorSamples(int)>& sampler,
                                 int grid_size, const ParameterPoint& point,
                                 double action) {
  MetricTensor g = metric_from_generators(sampler(grid_size), point, action);
  MetricTensor g2 = metric_from_generators(sampler(2 * grid_size), point, action);
  const double dev = (g.components - g2.components).cwiseAbs().maxCoeff();
  if (dev > 1e-10) {
    std::ostringstream os;
    os << "aliasing: grid of " << grid_size
       << " points too coarse (doubling moved a component by " << dev << ")";
    throw std::runtime_error(os.str());
  }
  return g;
}

OneForm connection_from_generators(const GeneratorSamples& gs,
                                   const ParameterPoint& point, double action) {
  if (gs.n_params() != point.size())
    throw std::invalid_argument("shape mismatch: generators vs parameters");
  if (gs.grid_size() == 0) throw std::invalid_argument("empty grid");
  Eigen::VectorXd a(gs.n_params());
  for (int i = 0; i < gs.n_params(); ++i) {
    double s = 0.0;
    for (int j = 0; j < gs.grid_size(); ++j) s += gs.values(i, j);
    a(i) = s / gs.grid_size();
  }
  return OneForm{std::move(a), point, action};
}

TwoForm curvature_from_phase_space_derivatives(const Eigen::MatrixXd& dp,
                                               const Eigen::MatrixXd& dq,
                                               const ParameterPoint& point,
                                               double action) {
  if (dp.rows() != dq.rows() || dp.cols() != dq.cols())
    throw std::invalid_argument("shape mismatch");
  if (dp.cols() == 0) throw std::invalid_argument("empty grid");
  if (dp.rows() != point.size())
    throw std::invalid_argument("shape mismatch: derivatives vs parameters");
  const int n = static_cast<int>(dp.rows());
  const int m = static_cast<int>(dp.cols());
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (int c = 0; c < m; ++c)
        s += dp(i, c) * dq(j, c) - dp(j, c) * dq(i, c);
      const double v = s / m;
      f(i, j) = v;
      f(j, i) = -v;
    }
  }
  return TwoForm{std::move(f), point, action};
}

MetricTensor transform_metric(const MetricTensor& g, const Eigen::MatrixXd& jacobian) {
  const int n = g.point.size();
  if (jacobian.rows() != n || jacobian.cols() != n)
    throw std::invalid_argument("shape mismatch: jacobian");
  double hadamard = 1.0;
  for (int i = 0; i < n; ++i) hadamard *= jacobian.row(i).norm();
  const double det = jacobian.determinant();
  if (std::abs(det) < 1e-14 * hadamard || det == 0.0)
    throw std::invalid_argument("singular jacobian");
  Eigen::MatrixXd gp = jacobian.transpose() * g.components * jacobian;
  // mirror the upper triangle so symmetry survives roundoff
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) gp(j, i) = gp(i, j);
  return MetricTensor{std::move(gp), g.point, g.action};
}

MetricTensor restrict_metric(const MetricTensor& g, std::span<const int> kept) {
  if (kept.empty()) throw std::invalid_argument("empty index set");
  const int n = g.point.size();
  std::vector<bool> seen(n, false);
  for (int idx : kept) {
    if (idx < 0 || idx >= n) throw std::invalid_argument("index out of range");
    if (seen[idx]) throw std::invalid_argument("duplicate index");
    seen[idx] = true;
  }
  const int m = static_cast<int>(kept.size());
  Eigen::MatrixXd sub(m, m);
  std::vector<std::string> names;
  std::vector<double> values;
  names.reserve(m);
  values.reserve(m);
  for (int a = 0; a < m; ++a) {
    names.push_back(g.point.names()[kept[a]]);
    values.push_back(g.point.values()[kept[a]]);
    for (int b = 0; b < m; ++b) sub(a, b) = g.components(kept[a], kept[b]);
  }
  return MetricTensor{std::move(sub),
                      ParameterPoint(std::move(names), std::move(values)),
                      g.action};
}

int matrix_rank(const MetricTensor& g, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw std::invalid_argument("rank tolerance must lie in (0, 1)");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(g.components);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cut = rel_tol * sv(0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut && sv(i) > 0.0) ++r;
  return r;
}

}  // namespace adiageo
