#include "adiageo/trig_series.hpp"

#include <cmath>

namespace adiageo::series {

namespace {
const CoefficientPoly kZeroPoly{};

double pow_half(double base, int exp2) {
  if (exp2 == 0) return 1.0;
  return std::pow(base, 0.5 * exp2);
}
}  // namespace

// ---------------------------------------------------------------------------
// CoefficientPoly

CoefficientPoly CoefficientPoly::constant(const Rational& c) {
  return term(c, Monomial{});
}

CoefficientPoly CoefficientPoly::term(const Rational& c, Monomial mono) {
  CoefficientPoly p;
  p.insert(mono, c);
  return p;
}

Rational CoefficientPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1 || terms_.begin()->first != Monomial{})
    throw std::logic_error("poly is not a constant");
  return terms_.begin()->second;
}

void CoefficientPoly::insert(Monomial mono, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(mono, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CoefficientPoly& CoefficientPoly::operator+=(const CoefficientPoly& o) {
  for (const auto& [mono, c] : o.terms_) insert(mono, c);
  return *this;
}

CoefficientPoly& CoefficientPoly::operator-=(const CoefficientPoly& o) {
  for (const auto& [mono, c] : o.terms_) insert(mono, -c);
  return *this;
}

CoefficientPoly CoefficientPoly::operator-() const {
  CoefficientPoly r;
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
  return r;
}

CoefficientPoly CoefficientPoly::operator*(const CoefficientPoly& o) const {
  CoefficientPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.insert(Monomial{ma.ei2 + mb.ei2, ma.em2 + mb.em2, ma.ek2 + mb.ek2}, ca * cb);
  return r;
}

CoefficientPoly CoefficientPoly::scaled(const Rational& c) const {
  return times_monomial(c, Monomial{});
}

CoefficientPoly CoefficientPoly::times_monomial(const Rational& c, Monomial d) const {
  CoefficientPoly r;
  if (c == 0) return r;
  for (const auto& [mono, coeff] : terms_)
    r.terms_.emplace(Monomial{mono.ei2 + d.ei2, mono.em2 + d.em2, mono.ek2 + d.ek2},
                     coeff * c);
  return r;
}

CoefficientPoly CoefficientPoly::derivative(Var v) const {
  CoefficientPoly r;
  for (const auto& [mono, c] : terms_) {
    Monomial m = mono;
    int e2 = 0;
    switch (v) {
      case Var::action:
        e2 = m.ei2;
        m.ei2 -= 2;
        break;
      case Var::mass:
        e2 = m.em2;
        m.em2 -= 2;
        break;
      case Var::stiffness:
        e2 = m.ek2;
        m.ek2 -= 2;
        break;
    }
    if (e2 != 0) r.insert(m, c * Rational(e2, 2));
  }
  return r;
}

double CoefficientPoly::eval(double action, double mass, double stiffness) const {
  double s = 0.0;
  for (const auto& [mono, c] : terms_)
    s += c.convert_to<double>() * pow_half(action, mono.ei2) *
         pow_half(mass, mono.em2) * pow_half(stiffness, mono.ek2);
  return s;
}

// ---------------------------------------------------------------------------
// TrigSeries

TrigSeries TrigSeries::constant(const CoefficientPoly& c) {
  return harmonic(0, Trig::cos, c);
}

TrigSeries TrigSeries::harmonic(int h, Trig t, const CoefficientPoly& c) {
  TrigSeries s;
  s.add(h, t, c);
  return s;
}

void TrigSeries::add(int h, Trig t, const CoefficientPoly& c) {
  if (c.is_zero()) return;
  if (h < 0) {
    // cos is even, sin is odd
    if (t == Trig::cos)
      add(-h, t, c);
    else
      add(-h, t, -c);
    return;
  }
  if (h == 0 && t == Trig::sin) return;  // sin(0) = 0
  auto& slot = harmonics_[h];
  auto& part = (t == Trig::cos) ? slot.first : slot.second;
  part += c;
  if (slot.first.is_zero() && slot.second.is_zero()) harmonics_.erase(h);
}

void TrigSeries::prune() {
  for (auto it = harmonics_.begin(); it != harmonics_.end();) {
    if (it->second.first.is_zero() && it->second.second.is_zero())
      it = harmonics_.erase(it);
    else
      ++it;
  }
}

int TrigSeries::max_harmonic() const {
  return harmonics_.empty() ? 0 : harmonics_.rbegin()->first;
}

const CoefficientPoly& TrigSeries::cos_part(int h) const {
  auto it = harmonics_.find(h);
  return it == harmonics_.end() ? kZeroPoly : it->second.first;
}

const CoefficientPoly& TrigSeries::sin_part(int h) const {
  auto it = harmonics_.find(h);
  return it == harmonics_.end() ? kZeroPoly : it->second.second;
}

TrigSeries& TrigSeries::operator+=(const TrigSeries& o) {
  for (const auto& [h, parts] : o.harmonics_) {
    add(h, Trig::cos, parts.first);
    add(h, Trig::sin, parts.second);
  }
  return *this;
}

TrigSeries& TrigSeries::operator-=(const TrigSeries& o) {
  for (const auto& [h, parts] : o.harmonics_) {
    add(h, Trig::cos, -parts.first);
    add(h, Trig::sin, -parts.second);
  }
  return *this;
}

TrigSeries TrigSeries::operator-() const {
  TrigSeries r;
  for (const auto& [h, parts] : harmonics_)
    r.harmonics_.emplace(h, std::make_pair(-parts.first, -parts.second));
  return r;
}

TrigSeries TrigSeries::operator*(const TrigSeries& o) const {
  const Rational half(1, 2);
  TrigSeries r;
  for (const auto& [ha, pa] : harmonics_) {
    for (const auto& [hb, pb] : o.harmonics_) {
      // cos a cos b = (cos(a-b) + cos(a+b))/2
      if (!pa.first.is_zero() && !pb.first.is_zero()) {
        CoefficientPoly c = (pa.first * pb.first).scaled(half);
        r.add(ha - hb, Trig::cos, c);
        r.add(ha + hb, Trig::cos, c);
      }
      // sin a sin b = (cos(a-b) - cos(a+b))/2
      if (!pa.second.is_zero() && !pb.second.is_zero()) {
        CoefficientPoly c = (pa.second * pb.second).scaled(half);
        r.add(ha - hb, Trig::cos, c);
        r.add(ha + hb, Trig::cos, -c);
      }
      // sin a cos b = (sin(a+b) + sin(a-b))/2
      if (!pa.second.is_zero() && !pb.first.is_zero()) {
        CoefficientPoly c = (pa.second * pb.first).scaled(half);
        r.add(ha + hb, Trig::sin, c);
        r.add(ha - hb, Trig::sin, c);
      }
      // cos a sin b = (sin(a+b) - sin(a-b))/2
      if (!pa.first.is_zero() && !pb.second.is_zero()) {
        CoefficientPoly c = (pa.first * pb.second).scaled(half);
        r.add(ha + hb, Trig::sin, c);
        r.add(ha - hb, Trig::sin, -c);
      }
    }
  }
  r.prune();
  return r;
}

TrigSeries TrigSeries::scaled(const Rational& c) const {
  return times_monomial(c, Monomial{});
}

TrigSeries TrigSeries::times_monomial(const Rational& c, Monomial d) const {
  TrigSeries r;
  if (c == 0) return r;
  for (const auto& [h, parts] : harmonics_)
    r.harmonics_.emplace(h, std::make_pair(parts.first.times_monomial(c, d),
                                           parts.second.times_monomial(c, d)));
  return r;
}

CoefficientPoly TrigSeries::average() const { return cos_part(0); }

TrigSeries TrigSeries::dphi() const {
  TrigSeries r;
  for (const auto& [h, parts] : harmonics_) {
    if (h == 0) continue;
    const Rational hh(h);
    // d/dphi cos(h phi) = -h sin(h phi); d/dphi sin(h phi) = h cos(h phi)
    r.add(h, Trig::sin, parts.first.scaled(-hh));
    r.add(h, Trig::cos, parts.second.scaled(hh));
  }
  return r;
}

TrigSeries TrigSeries::derivative(Var v) const {
  TrigSeries r;
  for (const auto& [h, parts] : harmonics_) {
    r.add(h, Trig::cos, parts.first.derivative(v));
    r.add(h, Trig::sin, parts.second.derivative(v));
  }
  return r;
}

TrigSeries TrigSeries::integrate_zero_mean() const {
  if (!average().is_zero())
    throw std::logic_error("integrate_zero_mean: nonzero angle average");
  TrigSeries r;
  for (const auto& [h, parts] : harmonics_) {
    if (h == 0) continue;
    const Rational inv(1, h);
    // int cos(h phi) = sin(h phi)/h; int sin(h phi) = -cos(h phi)/h
    r.add(h, Trig::sin, parts.first.scaled(inv));
    r.add(h, Trig::cos, parts.second.scaled(-inv));
  }
  return r;
}

double TrigSeries::eval(double action, double mass, double stiffness,
                        double phi) const {
  double s = 0.0;
  for (const auto& [h, parts] : harmonics_) {
    if (!parts.first.is_zero())
      s += parts.first.eval(action, mass, stiffness) * std::cos(h * phi);
    if (!parts.second.is_zero())
      s += parts.second.eval(action, mass, stiffness) * std::sin(h * phi);
  }
  return s;
}

// ---------------------------------------------------------------------------
// PerturbationSeries

PerturbationSeries::PerturbationSeries(int order, const TrigSeries& zeroth)
    : terms_(order + 1) {
  terms_[0] = zeroth;
}

bool PerturbationSeries::is_zero() const {
  for (const auto& t : terms_)
    if (!t.is_zero()) return false;
  return true;
}

PerturbationSeries& PerturbationSeries::operator+=(const PerturbationSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("order mismatch");
  for (size_t i = 0; i < terms_.size(); ++i) terms_[i] += o.terms_[i];
  return *this;
}

PerturbationSeries& PerturbationSeries::operator-=(const PerturbationSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("order mismatch");
  for (size_t i = 0; i < terms_.size(); ++i) terms_[i] -= o.terms_[i];
  return *this;
}

PerturbationSeries PerturbationSeries::operator*(const PerturbationSeries& o) const {
  if (o.order() != order()) throw std::invalid_argument("order mismatch");
  PerturbationSeries r(order());
  for (int a = 0; a <= order(); ++a) {
    if (terms_[a].is_zero()) continue;
    for (int b = 0; a + b <= order(); ++b) {
      if (o.terms_[b].is_zero()) continue;
      r.terms_[a + b] += terms_[a] * o.terms_[b];
    }
  }
  return r;
}

PerturbationSeries PerturbationSeries::scaled(const Rational& c) const {
  return times_monomial(c, Monomial{});
}

PerturbationSeries PerturbationSeries::times_monomial(const Rational& c,
                                                      Monomial d) const {
  PerturbationSeries r(order());
  for (int i = 0; i <= order(); ++i) r.terms_[i] = terms_[i].times_monomial(c, d);
  return r;
}

PerturbationSeries PerturbationSeries::truncated(int new_order) const {
  if (new_order > order()) throw std::invalid_argument("truncated: order grows");
  PerturbationSeries r(new_order);
  for (int i = 0; i <= new_order; ++i) r.terms_[i] = terms_[i];
  return r;
}

PerturbationSeries PerturbationSeries::extended(int new_order) const {
  if (new_order < order()) throw std::invalid_argument("extended: order shrinks");
  PerturbationSeries r(new_order);
  for (int i = 0; i <= order(); ++i) r.terms_[i] = terms_[i];
  return r;
}

PerturbationSeries PerturbationSeries::derivative(Var v) const {
  PerturbationSeries r(order());
  for (int i = 0; i <= order(); ++i) r.terms_[i] = terms_[i].derivative(v);
  return r;
}

PerturbationSeries PerturbationSeries::dphi() const {
  PerturbationSeries r(order());
  for (int i = 0; i <= order(); ++i) r.terms_[i] = terms_[i].dphi();
  return r;
}

PerturbationSeries PerturbationSeries::dlambda() const {
  if (order() == 0) return PerturbationSeries(0);
  PerturbationSeries r(order() - 1);
  for (int mu = 1; mu <= order(); ++mu)
    r.terms_[mu - 1] = terms_[mu].scaled(Rational(mu));
  return r;
}

PerturbationSeries PerturbationSeries::reciprocal() const {
  const TrigSeries one = TrigSeries::constant(CoefficientPoly::constant(1));
  if (terms_.empty() || !(terms_[0] == one))
    throw std::invalid_argument("reciprocal: lambda^0 part is not 1");
  PerturbationSeries r(order());
  r.terms_[0] = one;
  for (int mu = 1; mu <= order(); ++mu) {
    TrigSeries acc;
    for (int nu = 1; nu <= mu; ++nu) acc += terms_[nu] * r.terms_[mu - nu];
    r.terms_[mu] = -acc;
  }
  return r;
}

std::vector<CoefficientPoly> PerturbationSeries::average() const {
  std::vector<CoefficientPoly> r(terms_.size());
  for (size_t i = 0; i < terms_.size(); ++i) r[i] = terms_[i].average();
  return r;
}

double PerturbationSeries::eval(double action, double mass, double stiffness,
                                double coupling, double phi) const {
  double s = 0.0;
  double lam = 1.0;
  for (const auto& t : terms_) {
    if (!t.is_zero()) s += lam * t.eval(action, mass, stiffness, phi);
    lam *= coupling;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Free functions

Rational binomial(const Rational& r, int j) {
  Rational b(1);
  for (int t = 1; t <= j; ++t) b *= (r - (t - 1)) / t;
  return b;
}

TrigSeries solve_homological(const TrigSeries& phi_mu) {
  TrigSeries residual = phi_mu - TrigSeries::constant(phi_mu.average());
  if (!residual.average().is_zero())
    throw std::logic_error("solve_homological: residual has nonzero average");
  // omega_0 dW/dphi = -residual  =>  W = -(1/omega_0) * int residual dphi
  return residual.integrate_zero_mean().times_monomial(Rational(-1),
                                                       Monomial{0, 1, -1});
}

PerturbationSeries expand_action_power(const PerturbationSeries& u,
                                       const Rational& r) {
  if (!u.at(0).is_zero())
    throw std::invalid_argument("expand_action_power: nonzero lambda^0 part");
  const Rational two_r = 2 * r;
  if (denominator(two_r) != 1)
    throw std::invalid_argument("expand_action_power: exponent not half-integer");
  const int ei2 = two_r.convert_to<int>();

  const int n = u.order();
  PerturbationSeries sum(n, TrigSeries::constant(CoefficientPoly::constant(1)));
  PerturbationSeries upow(n, TrigSeries::constant(CoefficientPoly::constant(1)));
  for (int j = 1; j <= n; ++j) {
    upow = upow * u;
    if (upow.is_zero()) break;
    PerturbationSeries contrib = upow.scaled(binomial(r, j));
    sum += contrib;
  }
  return sum.times_monomial(Rational(1), Monomial{ei2, 0, 0});
}

std::vector<CoefficientPoly> convolve(const std::vector<CoefficientPoly>& a,
                                      const std::vector<CoefficientPoly>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("order mismatch");
  std::vector<CoefficientPoly> r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace adiageo::series
