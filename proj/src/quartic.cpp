#include "adiageo/quartic.hpp"

#include <cmath>
#include <numbers>

namespace adiageo::quartic {

using series::Monomial;
using series::Rational;
using series::Var;

namespace {

constexpr int kOrder = 3;       // internal truncation for W, q, p, S
constexpr int kMetricOrder = 2; // printed metric / generator truncation
constexpr int kFullOrder = 7;   // untruncated covariance of degree-2 inputs

using Trig = TrigSeries::Trig;

TrigSeries const_one() { return TrigSeries::constant(CoefficientPoly::constant(1)); }

/// sin^4(phi) = 3/8 - cos(2 phi)/2 + cos(4 phi)/8
TrigSeries sin4() {
  TrigSeries s = TrigSeries::constant(CoefficientPoly::constant(Rational(3, 8)));
  s += TrigSeries::harmonic(2, Trig::cos,
                            CoefficientPoly::constant(Rational(-1, 2)));
  s += TrigSeries::harmonic(4, Trig::cos,
                            CoefficientPoly::constant(Rational(1, 8)));
  return s;
}

/// Lifts a single lambda^mu coefficient into a graded series of given order.
PerturbationSeries graded(int order, int mu, const TrigSeries& t) {
  PerturbationSeries s(order);
  s.at(mu) = t;
  return s;
}

enum class Param { mass, stiffness, coupling };

/// d/dx_i at fixed (phi_0, I) of a graded series.
PerturbationSeries partial_fixed_phi0(const PerturbationSeries& f, Param which) {
  switch (which) {
    case Param::mass:
      return f.derivative(Var::mass);
    case Param::stiffness:
      return f.derivative(Var::stiffness);
    case Param::coupling:
      return f.dlambda().extended(f.order());
  }
  throw std::logic_error("unreachable");
}

struct Chart {
  PerturbationSeries phi_shift;  // phi - phi_0 (periodic part), order 3
  PerturbationSeries jac;        // dphi/dphi_0
  PerturbationSeries jac_inv;
  PerturbationSeries s_periodic; // S - I*phi_0
  PerturbationSeries q_tilde;    // q = sqrt(2) (mk)^{-1/4} q_tilde
  PerturbationSeries p_tilde;    // p = sqrt(2) (mk)^{+1/4} p_tilde
};

/// (d_i F)_{phi,I} = (d_i F)_{phi0,I}
///                   - [(dF/dphi0 + secular) / (dphi/dphi0)] (d_i phi)_{phi0,I}
/// where `secular` carries the slope of any phi_0-linear part of F.
PerturbationSeries chain_partial(const PerturbationSeries& f, Param which,
                                 const Chart& chart,
                                 const PerturbationSeries* secular = nullptr) {
  PerturbationSeries direct = partial_fixed_phi0(f, which);
  PerturbationSeries dphi_f = f.dphi();
  if (secular) dphi_f += *secular;
  PerturbationSeries dphi_param = partial_fixed_phi0(chart.phi_shift, which);
  return direct - dphi_f * chart.jac_inv * dphi_param;
}

PerturbationSeries resized(const PerturbationSeries& s, int order) {
  return order >= s.order() ? s.extended(order) : s.truncated(order);
}

std::array<std::vector<CoefficientPoly>, 6> weighted_covariance_series(
    const std::array<PerturbationSeries, 3>& g, const PerturbationSeries& jac,
    int order) {
  std::array<PerturbationSeries, 3> gx;
  for (int i = 0; i < 3; ++i) gx[i] = resized(g[i], order);
  const PerturbationSeries jx = resized(jac, order);

  std::array<std::vector<CoefficientPoly>, 3> mean;
  for (int i = 0; i < 3; ++i) mean[i] = (gx[i] * jx).average();

  std::array<std::vector<CoefficientPoly>, 6> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      std::vector<CoefficientPoly> raw = (gx[i] * gx[j] * jx).average();
      std::vector<CoefficientPoly> mm = series::convolve(mean[i], mean[j]);
      for (size_t mu = 0; mu < raw.size(); ++mu) raw[mu] -= mm[mu];
      out[component_index(i, j)] = std::move(raw);
    }
  }
  return out;
}

PipelineResult build_pipeline() {
  PipelineResult r;

  // Unperturbed data: H1 = I^2 sin^4(phi_0) / (6 m^2 omega_0^2),
  // with omega_0^2 = k/m so the coefficient is I^2/(6 m k).
  const TrigSeries h1 =
      sin4().times_monomial(Rational(1, 6), Monomial{4, -2, -2});
  const TrigSeries dh1_dI = h1.derivative(Var::action);
  const TrigSeries d2h1_dI2 = dh1_dI.derivative(Var::action);

  r.phi[0] = h1;
  r.w[0] = series::solve_homological(r.phi[0]);
  const TrigSeries dw1 = r.w[0].dphi();

  r.phi[1] = dw1 * dh1_dI;
  r.w[1] = series::solve_homological(r.phi[1]);
  const TrigSeries dw2 = r.w[1].dphi();

  r.phi[2] = (dw1 * dw1 * d2h1_dI2).scaled(Rational(1, 2)) + dw2 * dh1_dI;
  r.w[2] = series::solve_homological(r.phi[2]);

  // Canonical-transformation series at fixed truncation order 3.
  Chart chart;
  chart.phi_shift = PerturbationSeries(kOrder);
  PerturbationSeries i0_minus_i(kOrder);
  PerturbationSeries w_series(kOrder);
  for (int mu = 1; mu <= 3; ++mu) {
    chart.phi_shift.at(mu) = r.w[mu - 1].derivative(Var::action);
    i0_minus_i.at(mu) = r.w[mu - 1].dphi();
    w_series.at(mu) = r.w[mu - 1];
  }
  chart.jac = PerturbationSeries(kOrder, const_one()) + chart.phi_shift.dphi();
  chart.jac_inv = chart.jac.reciprocal();
  r.jacobian = chart.jac;

  // u = (I0 - I)/I, then I0^{1/2} and I0 by binomial expansion.
  const PerturbationSeries u =
      i0_minus_i.times_monomial(Rational(1), Monomial{-2, 0, 0});
  const PerturbationSeries sqrt_i0 =
      series::expand_action_power(u, Rational(1, 2));
  const PerturbationSeries i0 = series::expand_action_power(u, Rational(1));

  chart.q_tilde = sqrt_i0 * graded(kOrder, 0, TrigSeries::harmonic(
                                                 1, Trig::sin,
                                                 CoefficientPoly::constant(1)));
  chart.p_tilde = sqrt_i0 * graded(kOrder, 0, TrigSeries::harmonic(
                                                 1, Trig::cos,
                                                 CoefficientPoly::constant(1)));

  // S = I0 sin(phi_0) cos(phi_0) + I phi_0 + sum lambda^mu W_mu.
  // The phi_0-linear part I*phi_0 only enters through dS/dphi_0.
  chart.s_periodic =
      i0 * graded(kOrder, 0,
                  TrigSeries::harmonic(2, Trig::sin,
                                       CoefficientPoly::constant(Rational(1, 2)))) +
      w_series;
  const PerturbationSeries secular_slope(
      kOrder, TrigSeries::constant(CoefficientPoly::term(1, Monomial{2, 0, 0})));

  // G_i = p (d_i q)_{phi,I} - (d_i S)_{phi,I}. The irrational prefactors of
  // q and p multiply out exactly: p d_i q = 2 p_tilde [d_i q_tilde + c_i q_tilde
  // - (dq_tilde/dphi0) jac_inv (d_i phi)] with c_m = -1/(4m), c_k = -1/(4k).
  const std::array<Param, 3> params = {Param::mass, Param::stiffness,
                                       Param::coupling};
  for (int i = 0; i < 3; ++i) {
    PerturbationSeries dq = chain_partial(chart.q_tilde, params[i], chart);
    if (params[i] == Param::mass)
      dq += chart.q_tilde.times_monomial(Rational(-1, 4), Monomial{0, -2, 0});
    else if (params[i] == Param::stiffness)
      dq += chart.q_tilde.times_monomial(Rational(-1, 4), Monomial{0, 0, -2});
    const PerturbationSeries p_dq = (chart.p_tilde * dq).scaled(Rational(2));
    const PerturbationSeries ds =
        chain_partial(chart.s_periodic, params[i], chart, &secular_slope);
    r.generators[i] = (p_dq - ds).truncated(kMetricOrder);
  }

  r.metric = weighted_covariance_series(r.generators, chart.jac, kMetricOrder);
  r.metric_full = weighted_covariance_series(r.generators, chart.jac, kFullOrder);

  r.energy.resize(4);
  r.energy[0] = CoefficientPoly::term(1, Monomial{2, -1, 1});  // omega_0 I
  for (int mu = 1; mu <= 3; ++mu) r.energy[mu] = r.phi[mu - 1].average();

  return r;
}

}  // namespace

const PipelineResult& pipeline() {
  static const PipelineResult r = build_pipeline();
  return r;
}

int component_index(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return idx[i][j];
}

double eval_metric_component(const std::vector<CoefficientPoly>& component,
                             double action, double mass, double stiffness,
                             double coupling) {
  double s = 0.0;
  double lam = 1.0;
  for (const auto& c : component) {
    s += lam * c.eval(action, mass, stiffness);
    lam *= coupling;
  }
  return s;
}

MetricTensor metric_closed(double action, const QuarticPoint& x) {
  const auto& pr = pipeline();
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const double v = eval_metric_component(pr.metric[component_index(i, j)],
                                             action, x.mass, x.stiffness,
                                             x.coupling);
      g(i, j) = v;
      g(j, i) = v;
    }
  return MetricTensor{g, x.as_parameter_point(), action};
}

double energy_of_action(double action, const QuarticPoint& x) {
  const auto& pr = pipeline();
  double s = 0.0;
  double lam = 1.0;
  for (const auto& c : pr.energy) {
    s += lam * c.eval(action, x.mass, x.stiffness);
    lam *= x.coupling;
  }
  return s;
}

MetricTensor numeric_metric(double action, const QuarticPoint& x, int grid_size) {
  const auto& pr = pipeline();
  constexpr double two_pi = 2.0 * std::numbers::pi;

  // per-order samples of the generators and of the Jacobian weight
  std::array<std::array<std::vector<double>, kMetricOrder + 1>, 3> gen;
  std::array<std::vector<double>, kMetricOrder + 1> jac;
  for (int mu = 0; mu <= kMetricOrder; ++mu) {
    jac[mu].resize(grid_size);
    for (int i = 0; i < 3; ++i) gen[i][mu].resize(grid_size);
    for (int c = 0; c < grid_size; ++c) {
      const double phi = two_pi * c / grid_size;
      jac[mu][c] = pr.jacobian.at(mu).eval(action, x.mass, x.stiffness, phi);
      for (int i = 0; i < 3; ++i)
        gen[i][mu][c] =
            pr.generators[i].at(mu).eval(action, x.mass, x.stiffness, phi);
    }
  }

  auto avg_pair = [&](const std::vector<double>& a, const std::vector<double>& w) {
    return angle_average(a, w);
  };
  auto avg_triple = [&](const std::vector<double>& a, const std::vector<double>& b,
                        const std::vector<double>& w) {
    double s = 0.0;
    for (int c = 0; c < grid_size; ++c) s += a[c] * b[c] * w[c];
    return s / grid_size;
  };

  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      double total = 0.0;
      double lam = 1.0;
      for (int mu = 0; mu <= kMetricOrder; ++mu) {
        double order_sum = 0.0;
        for (int a = 0; a <= mu; ++a)
          for (int b = 0; a + b <= mu; ++b) {
            const int c = mu - a - b;
            order_sum += avg_triple(gen[i][a], gen[j][b], jac[c]);
          }
        for (int a = 0; a <= mu; ++a)
          for (int c = 0; a + c <= mu; ++c)
            for (int b = 0; a + c + b <= mu; ++b) {
              const int d = mu - a - c - b;
              order_sum -= avg_pair(gen[i][a], jac[c]) * avg_pair(gen[j][b], jac[d]);
            }
        total += lam * order_sum;
        lam *= x.coupling;
      }
      g(i, j) = total;
      g(j, i) = total;
    }
  }
  return MetricTensor{g, x.as_parameter_point(), action};
}

MetricTensor numeric_metric_full_product(double action, const QuarticPoint& x,
                                         int grid_size) {
  const auto& pr = pipeline();
  constexpr double two_pi = 2.0 * std::numbers::pi;
  GeneratorSamples gs(3, grid_size);
  std::vector<double> weights(grid_size);
  for (int c = 0; c < grid_size; ++c) {
    const double phi = two_pi * c / grid_size;
    weights[c] =
        pr.jacobian.eval(action, x.mass, x.stiffness, x.coupling, phi);
    for (int i = 0; i < 3; ++i)
      gs.values(i, c) =
          pr.generators[i].eval(action, x.mass, x.stiffness, x.coupling, phi);
  }
  return metric_from_generators(gs, x.as_parameter_point(), action, weights);
}

}  // namespace adiageo::quartic
