#include "adiageo/numeric_oracle.hpp"

#include "adiageo/quartic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace adiageo::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

int n_params(Model model) { return model == Model::gho ? 3 : 4; }

/// Lift a parameter vector to the linear-term model's (W, X, Y, Z) layout.
std::vector<double> lift(Model model, const std::vector<double>& params) {
  if (model == Model::gho_linear) return params;
  return {0.0, params[0], params[1], params[2]};
}

PhaseState map_state(Model model, double phi, double action,
                     const std::vector<double>& params) {
  if (model == Model::gho)
    return gho_action_angle_map(phi, action,
                                GhoPoint(params[0], params[1], params[2]));
  return gholin_action_angle_map(
      phi, action, GhoLinPoint(params[0], params[1], params[2], params[3]));
}

double generator_phase_space(Model model, int i, double q, double p,
                             const std::vector<double>& params) {
  const auto lifted = lift(model, params);
  const int idx = (model == Model::gho) ? i + 1 : i;
  return gholin_generator_phase_space(
      idx, q, p, GhoLinPoint(lifted[0], lifted[1], lifted[2], lifted[3]));
}

std::vector<double> generators_at(Model model, double phi, double action,
                                  const std::vector<double>& params) {
  if (model == Model::gho) {
    const auto g =
        gho_generators(phi, action, GhoPoint(params[0], params[1], params[2]));
    return {g[0], g[1], g[2]};
  }
  const auto g = gholin_generators(
      phi, action, GhoLinPoint(params[0], params[1], params[2], params[3]));
  return {g[0], g[1], g[2], g[3]};
}

GeneratorSamples sample_generators(Model model, double action,
                                   const std::vector<double>& params,
                                   int grid_size) {
  if (model == Model::gho)
    return sample_gho_generators(action, GhoPoint(params[0], params[1], params[2]),
                                 grid_size);
  return sample_gholin_generators(
      action, GhoLinPoint(params[0], params[1], params[2], params[3]), grid_size);
}

ParameterPoint make_point(Model model, const std::vector<double>& params) {
  if (model == Model::gho)
    return GhoPoint(params[0], params[1], params[2]).as_parameter_point();
  return GhoLinPoint(params[0], params[1], params[2], params[3])
      .as_parameter_point();
}

bool in_domain(Model model, const std::vector<double>& params) {
  if (model == Model::gho) return params[0] * params[2] - params[1] * params[1] > 0;
  return params[1] * params[3] - params[2] * params[2] > 0 && params[3] != 0;
}

/// Central difference in parameter i; shrinks the step once if a stencil
/// point leaves the domain, then gives up.
double central_param_diff(Model model, const std::vector<double>& params, int i,
                          const std::function<double(const std::vector<double>&)>& f) {
  double h = 1e-5 * (1.0 + std::abs(params[i]));
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<double> plus = params, minus = params;
    plus[i] += h;
    minus[i] -= h;
    if (!in_domain(model, plus) || !in_domain(model, minus)) {
      h *= 0.1;
      continue;
    }
    return (f(plus) - f(minus)) / (2.0 * h);
  }
  throw std::invalid_argument("domain violation at finite-difference stencil");
}

// --- Hamiltonian flows -------------------------------------------------------

struct Flow {
  // dq/dt, dp/dt at parameters x
  void rates(const std::vector<double>& x, double q, double p, double& dq,
             double& dp) const {
    if (model == Model::gho) {
      dq = x[1] * q + x[2] * p;
      dp = -(x[0] * q + x[1] * p);
    } else {
      dq = x[2] * q + x[3] * p;
      dp = -(x[1] * q + x[2] * p + x[0]);
    }
  }
  double hamiltonian(const std::vector<double>& x, double q, double p) const {
    if (model == Model::gho)
      return 0.5 * (x[0] * q * q + 2.0 * x[1] * q * p + x[2] * p * p);
    return 0.5 * (x[1] * q * q + 2.0 * x[2] * q * p + x[3] * p * p) + x[0] * q;
  }
  double action_of_state(const std::vector<double>& x, double q, double p) const {
    if (model == Model::gho) {
      const double w = std::sqrt(x[0] * x[2] - x[1] * x[1]);
      return hamiltonian(x, q, p) / w;
    }
    const double w2 = x[1] * x[3] - x[2] * x[2];
    const double w = std::sqrt(w2);
    return (hamiltonian(x, q, p) + 0.5 * x[0] * x[0] * x[3] / w2) / w;
  }
  double omega(const std::vector<double>& x) const {
    if (model == Model::gho) return std::sqrt(x[0] * x[2] - x[1] * x[1]);
    return std::sqrt(x[1] * x[3] - x[2] * x[2]);
  }
  Model model;
};

void rk4_step(const Flow& flow, const std::function<std::vector<double>(double)>& params_at,
              double t, double dt, double& q, double& p) {
  double k1q, k1p, k2q, k2p, k3q, k3p, k4q, k4p;
  const auto x1 = params_at(t);
  flow.rates(x1, q, p, k1q, k1p);
  const auto x2 = params_at(t + 0.5 * dt);
  flow.rates(x2, q + 0.5 * dt * k1q, p + 0.5 * dt * k1p, k2q, k2p);
  flow.rates(x2, q + 0.5 * dt * k2q, p + 0.5 * dt * k2p, k3q, k3p);
  const auto x4 = params_at(t + dt);
  flow.rates(x4, q + dt * k3q, p + dt * k3p, k4q, k4p);
  q += dt / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
  p += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
}

// --- Gauss-Legendre ----------------------------------------------------------

struct GaussRule {
  std::vector<double> x, w;  // on [-1, 1]
};

const GaussRule& gauss_legendre_96() {
  static const GaussRule rule = [] {
    constexpr int n = 96;
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (x * p0 - p1) / (x * x - 1.0);
        const double dx = p0 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      r.x[i] = -x;
      r.x[n - 1 - i] = x;
      r.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
      r.w[n - 1 - i] = r.w[i];
    }
    return r;
  }();
  return rule;
}

}  // namespace

// -----------------------------------------------------------------------------

double generator_displacement_check(Model model, double phi, double action,
                                    const std::vector<double>& params) {
  if (static_cast<int>(params.size()) != n_params(model))
    throw std::invalid_argument("shape mismatch: parameter count");
  if (!in_domain(model, params))
    throw std::invalid_argument("domain violation");

  const PhaseState s = map_state(model, phi, action, params);
  const double hq = 1e-5 * (1.0 + std::abs(s.q));
  const double hp = 1e-5 * (1.0 + std::abs(s.p));

  double worst = 0.0;
  for (int i = 0; i < n_params(model); ++i) {
    const double dq_dxi = central_param_diff(
        model, params, i, [&](const std::vector<double>& x) {
          return map_state(model, phi, action, x).q;
        });
    const double dp_dxi = central_param_diff(
        model, params, i, [&](const std::vector<double>& x) {
          return map_state(model, phi, action, x).p;
        });
    const double dgi_dp = (generator_phase_space(model, i, s.q, s.p + hp, params) -
                           generator_phase_space(model, i, s.q, s.p - hp, params)) /
                          (2.0 * hp);
    const double dgi_dq = (generator_phase_space(model, i, s.q + hq, s.p, params) -
                           generator_phase_space(model, i, s.q - hq, s.p, params)) /
                          (2.0 * hq);
    worst = std::max(worst, std::abs(dq_dxi - dgi_dp));
    worst = std::max(worst, std::abs(dp_dxi + dgi_dq));
  }
  return worst;
}

MetricTensor numeric_metric(Model model, double action,
                            const std::vector<double>& params, int grid_size) {
  const ParameterPoint pt = make_point(model, params);
  return metric_from_sampler(
      [&](int m) { return sample_generators(model, action, params, m); },
      grid_size, pt, action);
}

MetricTensor numeric_metric_quartic(double action, const QuarticPoint& x,
                                    int grid_size) {
  return quartic::numeric_metric(action, x, grid_size);
}

GaugeExperimentResult gauge_invariance_experiment(Model model,
                                                  const GaugeShift& shift,
                                                  double action,
                                                  const std::vector<double>& params,
                                                  int grid_size) {
  const int n = n_params(model);
  if (shift.param_index < 0 || shift.param_index >= n)
    throw std::invalid_argument("index out of range");

  // phi' = phi + dlambda/dI, G'_i(phi') = G_i(phi' - b) - d_i lambda
  const double b =
      2.0 * shift.c1 * action + shift.c2 * params[shift.param_index];
  std::vector<double> dlam(n, 0.0);
  dlam[shift.param_index] = shift.c2 * action;

  GeneratorSamples orig(n, grid_size), shifted(n, grid_size);
  for (int c = 0; c < grid_size; ++c) {
    const double phi = kTwoPi * c / grid_size;
    const auto g0 = generators_at(model, phi, action, params);
    const auto g1 = generators_at(model, phi - b, action, params);
    for (int i = 0; i < n; ++i) {
      orig.values(i, c) = g0[i];
      shifted.values(i, c) = g1[i] - dlam[i];
    }
  }

  const ParameterPoint pt = make_point(model, params);
  const MetricTensor m0 = metric_from_generators(orig, pt, action);
  const MetricTensor m1 = metric_from_generators(shifted, pt, action);

  auto raw_moment = [&](const GeneratorSamples& gs) {
    Eigen::MatrixXd r(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int c = 0; c < grid_size; ++c) s += gs.values(i, c) * gs.values(j, c);
        r(i, j) = s / grid_size;
      }
    return r;
  };

  GaugeExperimentResult res;
  res.metric_deviation = (m1.components - m0.components).cwiseAbs().maxCoeff();
  res.raw_term_deviation =
      (raw_moment(shifted) - raw_moment(orig)).cwiseAbs().maxCoeff();
  return res;
}

std::vector<double> RampSchedule::at(double t) const {
  if (start.size() != end.size())
    throw std::invalid_argument("shape mismatch: ramp endpoints");
  if (!(total_time > 0)) throw std::invalid_argument("ramp time must be positive");
  double s = t / total_time;
  s = std::clamp(s, 0.0, 1.0);
  const double w = s * s * (3.0 - 2.0 * s);  // smoothstep, C^1 at the ends
  std::vector<double> x(start.size());
  for (size_t i = 0; i < x.size(); ++i) x[i] = start[i] + w * (end[i] - start[i]);
  return x;
}

double adiabatic_action_drift(Model model, const RampSchedule& ramp,
                              PhaseState initial, int steps_per_period) {
  if (steps_per_period < 200)
    throw std::invalid_argument("need at least 200 steps per period");
  const Flow flow{model};

  auto params_at = [&](double t) {
    auto x = ramp.at(t);
    if (!in_domain(model, x))
      throw std::invalid_argument("domain violated mid-ramp");
    return x;
  };

  double omega_max = 0.0;
  for (int i = 0; i <= 256; ++i)
    omega_max = std::max(omega_max, flow.omega(params_at(ramp.total_time * i / 256.0)));
  const double dt_target = kTwoPi / (omega_max * steps_per_period);
  const long n_steps = std::lround(std::ceil(ramp.total_time / dt_target));
  const double dt = ramp.total_time / static_cast<double>(n_steps);

  double q = initial.q, p = initial.p;
  const double action0 = flow.action_of_state(params_at(0.0), q, p);
  if (!(action0 > 0)) throw std::invalid_argument("initial action must be positive");

  double worst = 0.0;
  for (long s = 0; s < n_steps; ++s) {
    const double t = dt * static_cast<double>(s);
    rk4_step(flow, params_at, t, dt, q, p);
    const double action = flow.action_of_state(params_at(t + dt), q, p);
    worst = std::max(worst, std::abs(action - action0) / action0);
  }
  return worst;
}

double frozen_energy_drift(Model model, const std::vector<double>& params,
                           PhaseState initial, double total_time, double dt) {
  const Flow flow{model};
  if (!in_domain(model, params)) throw std::invalid_argument("domain violation");
  auto params_at = [&](double) { return params; };
  double q = initial.q, p = initial.p;
  const double e0 = flow.hamiltonian(params, q, p);
  const long n_steps = std::lround(std::ceil(total_time / dt));
  double worst = 0.0;
  for (long s = 0; s < n_steps; ++s) {
    rk4_step(flow, params_at, dt * s, dt, q, p);
    worst = std::max(worst, std::abs(flow.hamiltonian(params, q, p) - e0));
  }
  return worst / std::abs(e0);
}

PhaseState integrate_frozen(Model model, const std::vector<double>& params,
                            PhaseState initial, double total_time, double dt) {
  const Flow flow{model};
  if (!in_domain(model, params)) throw std::invalid_argument("domain violation");
  auto params_at = [&](double) { return params; };
  double q = initial.q, p = initial.p;
  const long n_steps = std::lround(std::ceil(total_time / dt));
  const double step = total_time / static_cast<double>(n_steps);  // land on T
  for (long s = 0; s < n_steps; ++s) rk4_step(flow, params_at, step * s, step, q, p);
  return {q, p};
}

double quartic_frozen_energy_drift(const QuarticPoint& x, PhaseState initial,
                                   double total_time, double dt) {
  const double m = x.mass, k = x.stiffness, lam = x.coupling;
  auto hamiltonian = [&](double q, double p) {
    return 0.5 * p * p / m + 0.5 * k * q * q + lam * q * q * q * q / 24.0;
  };
  auto rates = [&](double q, double p, double& dq, double& dp) {
    dq = p / m;
    dp = -k * q - lam * q * q * q / 6.0;
  };
  double q = initial.q, p = initial.p;
  const double e0 = hamiltonian(q, p);
  const long n_steps = std::lround(std::ceil(total_time / dt));
  double worst = 0.0;
  for (long s = 0; s < n_steps; ++s) {
    double k1q, k1p, k2q, k2p, k3q, k3p, k4q, k4p;
    rates(q, p, k1q, k1p);
    rates(q + 0.5 * dt * k1q, p + 0.5 * dt * k1p, k2q, k2p);
    rates(q + 0.5 * dt * k2q, p + 0.5 * dt * k2p, k3q, k3p);
    rates(q + dt * k3q, p + dt * k3p, k4q, k4p);
    q += dt / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    p += dt / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    worst = std::max(worst, std::abs(hamiltonian(q, p) - e0));
  }
  return worst / std::abs(e0);
}

double numeric_action_of_energy(const std::function<double(double)>& potential,
                                double mass, double energy) {
  if (!(mass > 0)) throw std::invalid_argument("mass must be positive");

  // an interior point with V < E; the confining wells here have one near 0
  double q_in = 0.0;
  if (!(potential(q_in) < energy)) {
    bool found = false;
    double closest = potential(0.0);
    for (double step = 1e-6; step < 1e6 && !found; step *= 2.0)
      for (double sgn : {1.0, -1.0}) {
        const double v = potential(sgn * step);
        closest = std::min(closest, v);
        if (v < energy) {
          q_in = sgn * step;
          found = true;
          break;
        }
      }
    if (!found) {
      // the orbit degenerates to the minimum itself
      if (closest == energy) return 0.0;
      throw std::invalid_argument("no real turning points");
    }
  }

  auto turning_point = [&](double direction) {
    double span = 1.0;
    while (potential(q_in + direction * span) < energy) {
      span *= 2.0;
      if (span > 1e12) throw std::invalid_argument("potential not confining");
    }
    double lo = (span == 1.0) ? 0.0 : span / 2.0;
    double hi = span;
    // bisect V(q_in + dir*s) = E to 1e-12 relative
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (potential(q_in + direction * mid) < energy)
        lo = mid;
      else
        hi = mid;
      if (hi - lo <= 1e-12 * std::max(1.0, hi)) break;
    }
    return q_in + direction * 0.5 * (lo + hi);
  };

  const double q_plus = turning_point(1.0);
  const double q_minus = turning_point(-1.0);
  const double q_mid = 0.5 * (q_plus + q_minus);

  // q = q_mid +- (q_turn - q_mid) sin(theta) removes the sqrt singularity
  const auto& rule = gauss_legendre_96();
  auto half_integral = [&](double q_turn) {
    const double amp = q_turn - q_mid;
    double s = 0.0;
    for (size_t i = 0; i < rule.x.size(); ++i) {
      const double theta = 0.25 * kPi * (rule.x[i] + 1.0);
      const double q = q_mid + amp * std::sin(theta);
      const double under = 2.0 * mass * (energy - potential(q));
      s += rule.w[i] * std::sqrt(std::max(0.0, under)) * std::cos(theta);
    }
    return s * 0.25 * kPi * std::abs(amp);
  };

  return (half_integral(q_plus) + half_integral(q_minus)) / kPi;
}

}  // namespace adiageo::oracle
