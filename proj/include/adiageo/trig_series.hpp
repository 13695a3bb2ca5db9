#pragma once

// Exact arithmetic for finite Fourier series in one angle whose coefficients
// are rational multiples of half-integer-power monomials in (I, m, k), graded
// by powers of the quartic coupling. Everything here is exact: no doubles
// enter until eval().

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

namespace adiageo::series {

using Rational = boost::multiprecision::cpp_rational;

/// Differentiation / monomial variables: action I, mass m, stiffness k.
enum class Var { action, mass, stiffness };

/// I^(ei2/2) * m^(em2/2) * k^(ek2/2). Exponents are stored doubled so that
/// half-integer powers (from omega_0 = m^{-1/2} k^{1/2}) stay integer keys.
struct Monomial {
  int ei2 = 0;
  int em2 = 0;
  int ek2 = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial: map Monomial -> nonzero Rational.
class CoefficientPoly {
 public:
  CoefficientPoly() = default;

  static CoefficientPoly constant(const Rational& c);
  static CoefficientPoly term(const Rational& c, Monomial mono);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  /// The value of a poly that must consist of a single constant term
  /// (empty poly reads as zero). Throws otherwise; test convenience.
  Rational constant_value() const;

  CoefficientPoly& operator+=(const CoefficientPoly& o);
  CoefficientPoly& operator-=(const CoefficientPoly& o);
  friend CoefficientPoly operator+(CoefficientPoly a, const CoefficientPoly& b) {
    a += b;
    return a;
  }
  friend CoefficientPoly operator-(CoefficientPoly a, const CoefficientPoly& b) {
    a -= b;
    return a;
  }
  CoefficientPoly operator-() const;
  CoefficientPoly operator*(const CoefficientPoly& o) const;
  CoefficientPoly scaled(const Rational& c) const;
  /// Multiply by c * I^(d.ei2/2) m^(d.em2/2) k^(d.ek2/2).
  CoefficientPoly times_monomial(const Rational& c, Monomial d) const;

  /// d/dI, d/dm or d/dk acting on the monomial exponents.
  CoefficientPoly derivative(Var v) const;

  double eval(double action, double mass, double stiffness) const;

  friend bool operator==(const CoefficientPoly&, const CoefficientPoly&) = default;

 private:
  void insert(Monomial mono, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// Finite Fourier series sum_h [ C_h cos(h phi) + S_h sin(h phi) ], h >= 0,
/// with the h = 0 sine part identically absent.
class TrigSeries {
 public:
  enum class Trig { cos, sin };

  TrigSeries() = default;

  static TrigSeries constant(const CoefficientPoly& c);
  static TrigSeries harmonic(int h, Trig t, const CoefficientPoly& c);

  bool is_zero() const { return harmonics_.empty(); }
  int max_harmonic() const;
  /// Cos / sin coefficient at harmonic h (zero poly if absent).
  const CoefficientPoly& cos_part(int h) const;
  const CoefficientPoly& sin_part(int h) const;
  const std::map<int, std::pair<CoefficientPoly, CoefficientPoly>>& harmonics() const {
    return harmonics_;
  }

  TrigSeries& operator+=(const TrigSeries& o);
  TrigSeries& operator-=(const TrigSeries& o);
  friend TrigSeries operator+(TrigSeries a, const TrigSeries& b) {
    a += b;
    return a;
  }
  friend TrigSeries operator-(TrigSeries a, const TrigSeries& b) {
    a -= b;
    return a;
  }
  TrigSeries operator-() const;
  /// Exact product with product-to-sum linearisation.
  TrigSeries operator*(const TrigSeries& o) const;
  TrigSeries scaled(const Rational& c) const;
  TrigSeries times_monomial(const Rational& c, Monomial d) const;

  /// Angle average: the harmonic-0 cosine part.
  CoefficientPoly average() const;
  /// d/dphi.
  TrigSeries dphi() const;
  /// Coefficient-level d/dI, d/dm, d/dk.
  TrigSeries derivative(Var v) const;
  /// Antiderivative in phi with zero average; requires zero input average.
  TrigSeries integrate_zero_mean() const;

  double eval(double action, double mass, double stiffness, double phi) const;

  friend bool operator==(const TrigSeries&, const TrigSeries&) = default;

 private:
  void add(int h, Trig t, const CoefficientPoly& c);
  void prune();
  // h -> (cos part, sin part)
  std::map<int, std::pair<CoefficientPoly, CoefficientPoly>> harmonics_;
};

/// Truncated power series in the coupling: terms_[mu] multiplies lambda^mu.
class PerturbationSeries {
 public:
  PerturbationSeries() = default;
  explicit PerturbationSeries(int order) : terms_(order + 1) {}
  PerturbationSeries(int order, const TrigSeries& zeroth);

  int order() const { return static_cast<int>(terms_.size()) - 1; }
  const TrigSeries& at(int mu) const { return terms_.at(mu); }
  TrigSeries& at(int mu) { return terms_.at(mu); }
  bool is_zero() const;

  PerturbationSeries& operator+=(const PerturbationSeries& o);
  PerturbationSeries& operator-=(const PerturbationSeries& o);
  friend PerturbationSeries operator+(PerturbationSeries a, const PerturbationSeries& b) {
    a += b;
    return a;
  }
  friend PerturbationSeries operator-(PerturbationSeries a, const PerturbationSeries& b) {
    a -= b;
    return a;
  }
  /// Exact product truncated at the common order; throws on order mismatch.
  PerturbationSeries operator*(const PerturbationSeries& o) const;
  PerturbationSeries scaled(const Rational& c) const;
  PerturbationSeries times_monomial(const Rational& c, Monomial d) const;

  PerturbationSeries truncated(int new_order) const;
  /// Pad with zero top orders. Only exact when the series really is a
  /// polynomial of the original degree (which is how it is used here).
  PerturbationSeries extended(int new_order) const;

  PerturbationSeries derivative(Var v) const;
  PerturbationSeries dphi() const;
  /// d/dlambda: shifts the grading down; result order drops by one.
  PerturbationSeries dlambda() const;
  /// 1/a computed by geometric-series recursion; lambda^0 part must be the
  /// exact constant 1.
  PerturbationSeries reciprocal() const;

  /// Per-order angle averages.
  std::vector<CoefficientPoly> average() const;

  double eval(double action, double mass, double stiffness, double coupling,
              double phi) const;

  friend bool operator==(const PerturbationSeries&, const PerturbationSeries&) = default;

 private:
  std::vector<TrigSeries> terms_;
};

/// binom(r, j) for rational r, exact.
Rational binomial(const Rational& r, int j);

/// Solves omega_0 dW/dphi = <Phi> - Phi for the zero-average W.
/// Term rules: c cos(h phi) -> -(c/(h omega_0)) sin(h phi),
///             s sin(h phi) -> +(s/(h omega_0)) cos(h phi).
TrigSeries solve_homological(const TrigSeries& phi_mu);

/// I_0^r = I^r (1 + u)^r expanded binomially through the order of u,
/// where u = (I_0 - I)/I is O(lambda) (zero lambda^0 part required) and
/// r is a half-integer.
PerturbationSeries expand_action_power(const PerturbationSeries& u, const Rational& r);

/// Convolution of per-order scalar sequences (used for products of averages).
std::vector<CoefficientPoly> convolve(const std::vector<CoefficientPoly>& a,
                                      const std::vector<CoefficientPoly>& b);

}  // namespace adiageo::series
