#include "adiageo/quantum.hpp"

#include "adiageo/quartic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adiageo::quantum {

using series::Monomial;
using series::Rational;

namespace {

void check_level(const QuantumLevel& lv) {
  if (lv.n < 0) throw std::invalid_argument("level n must be nonnegative");
  if (!(lv.hbar > 0)) throw std::invalid_argument("hbar must be positive");
}

/// Normalized Hermite function chi_n(xi) = (2^n n! sqrt(pi))^{-1/2}
/// e^{-xi^2/2} H_n(xi), by the stable three-term recurrence.
double hermite_chi(int n, double xi) {
  const double chi0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * xi * xi);
  if (n == 0) return chi0;
  double prev = chi0;
  double cur = std::numbers::sqrt2 * xi * chi0;
  for (int j = 2; j <= n; ++j) {
    double next = xi * std::sqrt(2.0 / j) * cur - std::sqrt((j - 1.0) / j) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

struct SimpsonGrid {
  std::vector<double> q;
  std::vector<double> w;  // quadrature weights including dq
};

SimpsonGrid simpson_grid(double center, double half, int nodes) {
  if (nodes < 3) nodes = 3;
  if (nodes % 2 == 0) ++nodes;
  SimpsonGrid g;
  g.q.resize(nodes);
  g.w.resize(nodes);
  const double a = center - half;
  const double dq = 2.0 * half / (nodes - 1);
  for (int j = 0; j < nodes; ++j) {
    g.q[j] = a + dq * j;
    double c = (j == 0 || j == nodes - 1) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    g.w[j] = c * dq / 3.0;
  }
  return g;
}

using CVec = std::vector<std::complex<double>>;

std::complex<double> overlap(const SimpsonGrid& g, const CVec& a, const CVec& b) {
  std::complex<double> s = 0.0;
  for (size_t j = 0; j < a.size(); ++j) s += g.w[j] * std::conj(a[j]) * b[j];
  return s;
}

}  // namespace

// --- closed forms -----------------------------------------------------------

MetricTensor gho_quantum_metric(const QuantumLevel& lv, const GhoPoint& x) {
  check_level(lv);
  const double s = static_cast<double>(lv.n) * lv.n + lv.n + 1;
  return MetricTensor{s * gho_metric_base(x), x.as_parameter_point(),
                      (lv.n + 0.5) * lv.hbar};
}

std::pair<OneForm, TwoForm> gho_berry(const QuantumLevel& lv, const GhoPoint& x) {
  check_level(lv);
  const double c = lv.n + 0.5;
  const ParameterPoint pt = x.as_parameter_point();
  return {OneForm{c * gho_connection_base(x), pt, c * lv.hbar},
          TwoForm{c * gho_curvature_base(x), pt, c * lv.hbar}};
}

Eigen::Matrix3d gho_quantum_metric_dn(const QuantumLevel& lv, const GhoPoint& x) {
  check_level(lv);
  return (2.0 * lv.n + 1.0) * gho_metric_base(x);
}

MetricTensor gholin_quantum_metric(const QuantumLevel& lv, const GhoLinPoint& x) {
  check_level(lv);
  const auto [b1, b2] = gholin_metric_bases(x);
  const double s = static_cast<double>(lv.n) * lv.n + lv.n + 1;
  const double c = (lv.n + 0.5) / lv.hbar;
  return MetricTensor{s * b1 + c * b2, x.as_parameter_point(),
                      (lv.n + 0.5) * lv.hbar};
}

std::pair<OneForm, TwoForm> gholin_berry(const QuantumLevel& lv,
                                         const GhoLinPoint& x) {
  check_level(lv);
  const auto [a1, a2] = gholin_connection_bases(x);
  const auto [k1, k2] = gholin_curvature_bases(x);
  const double c = lv.n + 0.5;
  const ParameterPoint pt = x.as_parameter_point();
  return {OneForm{c * a1 + a2 / lv.hbar, pt, c * lv.hbar},
          TwoForm{c * k1 + k2 / lv.hbar, pt, c * lv.hbar}};
}

Eigen::Matrix4d gholin_quantum_metric_dn(const QuantumLevel& lv,
                                         const GhoLinPoint& x) {
  check_level(lv);
  const auto [b1, b2] = gholin_metric_bases(x);
  return (2.0 * lv.n + 1.0) * b1 + b2 / lv.hbar;
}

std::pair<MetricTensor, OneForm> operator_metric_and_connection(
    const QuantumLevel& lv, const GhoLinPoint& x) {
  check_level(lv);
  const GeneratorCoeffs c = gholin_generator_coeffs(x);
  const double w = x.omega();
  const double w2 = w * w;
  std::array<double, 4> l, m;
  for (int i = 0; i < 4; ++i) {
    l[i] = c.g[i] - (x.Y / x.Z) * c.f[i];
    m[i] = c.h[i] - (x.W * x.Z / w2) * c.f[i];
  }
  const double ns = 1.0 + lv.n + static_cast<double>(lv.n) * lv.n;
  const double cn = lv.n + 0.5;
  const double w6 = w2 * w2 * w2;
  const double z4 = x.Z * x.Z * x.Z * x.Z;

  Eigen::Matrix4d g;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const double v =
          0.5 * ns * (c.f[i] * c.f[j] + (x.Z * x.Z / w2) * l[i] * l[j]) +
          (cn * w / (lv.hbar * x.Z)) *
              ((4.0 * x.W * x.W * z4 / w6) * l[i] * l[j] + m[i] * m[j]);
      g(i, j) = v;
      g(j, i) = v;
    }

  const double afac = cn * x.Z / w + x.W * x.W * x.Z * x.Z / (lv.hbar * w2 * w2);
  Eigen::Vector4d a;
  for (int i = 0; i < 4; ++i) a(i) = l[i] * afac;

  const ParameterPoint pt = x.as_parameter_point();
  return {MetricTensor{std::move(g), pt, cn * lv.hbar},
          OneForm{std::move(a), pt, cn * lv.hbar}};
}

// --- wavefunctions -----------------------------------------------------------

WavefunctionSampler gho_wavefunction(int n, double hbar) {
  check_level({n, hbar});
  WavefunctionSampler s;
  s.psi = [n, hbar](double q, const std::vector<double>& p) {
    const double X = p.at(0), Y = p.at(1), Z = p.at(2);
    const double disc = X * Z - Y * Y;
    if (!(disc > 0)) throw std::invalid_argument("domain violation: X*Z - Y^2 <= 0");
    const double w = std::sqrt(disc);
    const double a = w / (Z * hbar);
    const double chi = hermite_chi(n, q * std::sqrt(a));
    const double phase = -Y * q * q / (2.0 * Z * hbar);
    return std::pow(a, 0.25) * chi *
           std::complex<double>(std::cos(phase), std::sin(phase));
  };
  s.window = [n, hbar](const std::vector<double>& p) {
    const double w = std::sqrt(p.at(0) * p.at(2) - p.at(1) * p.at(1));
    const double sigma = std::sqrt(p.at(2) * hbar / w);
    return std::pair<double, double>(0.0, 12.0 * sigma * std::sqrt(n + 1.0));
  };
  return s;
}

WavefunctionSampler gholin_wavefunction(int n, double hbar) {
  check_level({n, hbar});
  WavefunctionSampler s;
  s.psi = [n, hbar](double q, const std::vector<double>& p) {
    const double W = p.at(0), X = p.at(1), Y = p.at(2), Z = p.at(3);
    const double disc = X * Z - Y * Y;
    if (!(disc > 0)) throw std::invalid_argument("domain violation: X*Z - Y^2 <= 0");
    const double w = std::sqrt(disc);
    const double a = w / (Z * hbar);
    const double chi = hermite_chi(n, (q + W * Z / (w * w)) * std::sqrt(a));
    const double phase = -Y * q * q / (2.0 * Z * hbar);
    return std::pow(a, 0.25) * chi *
           std::complex<double>(std::cos(phase), std::sin(phase));
  };
  s.window = [n, hbar](const std::vector<double>& p) {
    const double w = std::sqrt(p.at(1) * p.at(3) - p.at(2) * p.at(2));
    const double sigma = std::sqrt(p.at(3) * hbar / w);
    const double center = -p.at(0) * p.at(3) / (w * w);
    return std::pair<double, double>(center, 12.0 * sigma * std::sqrt(n + 1.0));
  };
  return s;
}

QuarticGroundState quartic_ground_state(const QuarticPoint& x, double hbar) {
  if (!(hbar > 0)) throw std::invalid_argument("hbar must be positive");
  QuarticGroundState gs;
  gs.energy = quartic_ground_energy(x, hbar);
  gs.lambda_scale =
      hbar * x.coupling / (12.0 * x.mass * x.mass * std::pow(x.omega0(), 3));
  gs.perturbative = gs.lambda_scale <= 0.1;

  gs.sampler.psi = [hbar](double q, const std::vector<double>& p) {
    const double m = p.at(0), k = p.at(1), lam = p.at(2);
    if (!(m > 0) || !(k > 0))
      throw std::invalid_argument("domain violation: m, k must be positive");
    const double w0 = std::sqrt(k / m);
    const double L = hbar * lam / (12.0 * m * m * w0 * w0 * w0);
    const double u = m * w0 * q * q / hbar;
    // correction polynomials in u = m omega_0 q^2 / hbar
    const double p1 = (4.0 * u + 12.0) * u - 9.0;
    const double p2 = (((48.0 * u + 416.0) * u + 1272.0) * u + 3384.0) * u - 4677.0;
    const double p3 =
        (((((64.0 * u + 1088.0) * u + 8592.0) * u + 48288.0) * u + 154524.0) * u +
         419076.0) * u - 729153.0;
    const double series =
        1.0 - (L / 32.0) * p1 + (L * L / 6144.0) * p2 -
        (L * L * L / 196608.0) * p3;
    const double lead = std::pow(m * w0 / (std::numbers::pi * hbar), 0.25);
    return std::complex<double>(lead * std::exp(-0.5 * u) * series, 0.0);
  };
  gs.sampler.window = [hbar](const std::vector<double>& p) {
    const double w0 = std::sqrt(p.at(1) / p.at(0));
    return std::pair<double, double>(0.0, 12.0 * std::sqrt(hbar / (p.at(0) * w0)));
  };
  return gs;
}

double quartic_ground_energy(const QuarticPoint& x, double hbar) {
  const double m = x.mass, k = x.stiffness, lam = x.coupling;
  const double w0 = x.omega0();
  const double h2 = hbar * hbar;
  return 0.5 * hbar * w0 + h2 * lam / (32.0 * m * k) -
         7.0 * h2 * hbar * lam * lam /
             (1536.0 * std::pow(m, 1.5) * std::pow(k, 2.5)) +
         37.0 * h2 * h2 * lam * lam * lam / (24576.0 * m * m * k * k * k * k);
}

double quartic_ground_energy_dimensionless(const QuarticPoint& x, double hbar) {
  const double w0 = x.omega0();
  const double L = hbar * x.coupling / (12.0 * x.mass * x.mass * w0 * w0 * w0);
  const double eps =
      1.0 + 0.75 * L - (21.0 / 16.0) * L * L + (333.0 / 64.0) * L * L * L;
  return 0.5 * hbar * w0 * eps;
}

MetricTensor quantum_metric_numeric(const WavefunctionSampler& sampler,
                                    const ParameterPoint& x,
                                    std::vector<double> steps) {
  const std::vector<double>& xv = x.values();
  const int n = x.size();
  if (steps.empty()) {
    steps.resize(n);
    for (int i = 0; i < n; ++i) steps[i] = 1e-4 * (1.0 + std::abs(xv[i]));
  }
  if (static_cast<int>(steps.size()) != n)
    throw std::invalid_argument("shape mismatch: steps vs parameters");
  for (double h : steps)
    if (!(h > 0)) throw std::invalid_argument("parameter step must be positive");

  const auto [center, half] = sampler.window(xv);
  const SimpsonGrid grid = simpson_grid(center, half, sampler.nodes);
  const int m = static_cast<int>(grid.q.size());

  auto sample = [&](const std::vector<double>& params) {
    CVec v(m);
    for (int j = 0; j < m; ++j) v[j] = sampler.psi(grid.q[j], params);
    return v;
  };
  auto normalize = [&](CVec& v) {
    const double norm2 = overlap(grid, v, v).real();
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : v) c *= inv;
    return norm2;
  };

  CVec psi0 = sample(xv);
  const double norm0 = normalize(psi0);

  std::vector<CVec> dpsi(n);
  for (int i = 0; i < n; ++i) {
    std::vector<double> xp = xv, xm = xv;
    xp[i] += steps[i];
    xm[i] -= steps[i];
    CVec plus = sample(xp);
    CVec minus = sample(xm);
    const double np = normalize(plus);
    const double nm = normalize(minus);
    if (std::abs(np - norm0) > 1e-8 * norm0 || std::abs(nm - norm0) > 1e-8 * norm0)
      throw std::runtime_error("window too small: normalization drift across step");
    dpsi[i].resize(m);
    const double inv2h = 1.0 / (2.0 * steps[i]);
    for (int j = 0; j < m; ++j) dpsi[i][j] = (plus[j] - minus[j]) * inv2h;
  }

  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) {
    const std::complex<double> di0 = overlap(grid, dpsi[i], psi0);
    for (int j = i; j < n; ++j) {
      const std::complex<double> dij = overlap(grid, dpsi[i], dpsi[j]);
      const std::complex<double> d0j = overlap(grid, psi0, dpsi[j]);
      const double v = (dij - di0 * d0j).real();
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return MetricTensor{std::move(g), x, 0.0};
}

// --- quartic closed quantum metric ------------------------------------------

namespace {

struct QuantumCoeff {
  long long num, den;
  int e2h, e2m, e2k;  // doubled exponents of hbar, m, k
};

// components (mm, mk, ml, kk, kl, ll), lambda orders 0..2
constexpr QuantumCoeff kQuarticQuantum[6][3] = {
    {{1, 32, 0, -4, 0}, {-3, 512, 2, -5, -3}, {59, 16384, 4, -6, -6}},
    {{1, 32, 0, -2, -2}, {-7, 512, 2, -3, -5}, {143, 16384, 4, -4, -8}},
    {{1, 128, 2, -3, -3}, {-21, 4096, 4, -4, -6}, {2353, 589824, 6, -5, -9}},
    {{1, 32, 0, 0, -4}, {-11, 512, 2, -1, -7}, {785, 49152, 4, -2, -10}},
    {{1, 128, 2, -1, -5}, {-89, 12288, 4, -2, -8}, {3841, 589824, 6, -3, -11}},
    {{13, 6144, 4, -2, -6}, {-31, 12288, 6, -3, -9}, {57227, 21233664, 8, -4, -12}},
};

double eval_quantum_coeff(const QuantumCoeff& c, double hbar, double m, double k) {
  return (static_cast<double>(c.num) / static_cast<double>(c.den)) *
         std::pow(hbar, 0.5 * c.e2h) * std::pow(m, 0.5 * c.e2m) *
         std::pow(k, 0.5 * c.e2k);
}

}  // namespace

MetricTensor quartic_quantum_metric_closed(const QuarticPoint& x, double hbar) {
  if (!(hbar > 0)) throw std::invalid_argument("hbar must be positive");
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const auto& comp = kQuarticQuantum[quartic::component_index(i, j)];
      double v = 0.0;
      double lam = 1.0;
      for (int mu = 0; mu <= 2; ++mu) {
        v += lam * eval_quantum_coeff(comp[mu], hbar, x.mass, x.stiffness);
        lam *= x.coupling;
      }
      g(i, j) = v;
      g(j, i) = v;
    }
  return MetricTensor{g, x.as_parameter_point(), 0.5 * hbar};
}

std::vector<IdentificationEntry> quartic_identification_table() {
  const auto& pr = quartic::pipeline();
  std::vector<IdentificationEntry> table;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const int ci = quartic::component_index(i, j);
      for (int mu = 0; mu <= 2; ++mu) {
        const auto& classical = pr.metric[ci][mu];
        if (classical.terms().size() != 1)
          throw std::logic_error("classical metric coefficient is not a monomial");
        const auto& [mono, c_cl] = *classical.terms().begin();
        const QuantumCoeff& qc = kQuarticQuantum[ci][mu];
        // hbar^2 * quantum must carry the same (m, k) dependence and trade
        // I^s for hbar^s
        if (qc.e2m != mono.em2 || qc.e2k != mono.ek2 || qc.e2h + 4 != mono.ei2)
          throw std::logic_error("quantum/classical exponent mismatch");
        IdentificationEntry e;
        e.i = i;
        e.j = j;
        e.lambda_order = mu;
        e.action_power = mono.ei2 / 2;
        e.ratio = Rational(qc.num, qc.den) / c_cl;
        table.push_back(e);
      }
    }
  }
  return table;
}

}  // namespace adiageo::quantum
