#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adiageo/core_geometry.hpp"
#include "adiageo/models.hpp"
#include "test_support.hpp"

#include <cmath>
#include <numbers>

using namespace adiageo;
using testsupport::Rng;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double gho_hamiltonian(const GhoPoint& x, const PhaseState& s) {
  return 0.5 * (x.X * s.q * s.q + 2.0 * x.Y * s.q * s.p + x.Z * s.p * s.p);
}

double gholin_hamiltonian(const GhoLinPoint& x, const PhaseState& s) {
  return 0.5 * (x.X * s.q * s.q + 2.0 * x.Y * s.q * s.p + x.Z * s.p * s.p) +
         x.W * s.q;
}
}  // namespace

TEST_CASE("action-angle map of the plain model") {
  const GhoPoint x(1.0, 0.0, 1.0);
  const PhaseState s = gho_action_angle_map(std::numbers::pi / 2, 1.0, x);
  CHECK(s.q == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  CHECK(std::abs(s.p) < 1e-15);

  CHECK(gho_action_angle_map(0.0, 0.7, GhoPoint(1.4, 0.3, 0.9)).q == 0.0);

  // H(q(phi,I), p(phi,I)) = w I independent of the angle
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const GhoPoint xr = testsupport::random_gho(rng);
    const double action = testsupport::uniform(rng, 0.2, 3.0);
    const double phi = testsupport::uniform(rng, 0.0, kTwoPi);
    const PhaseState sr = gho_action_angle_map(phi, action, xr);
    CHECK(gho_hamiltonian(xr, sr) ==
          doctest::Approx(xr.omega() * action).epsilon(1e-12));
  }
}

TEST_CASE("generating function of the plain model") {
  const GhoPoint x(1.0, 0.0, 1.0);
  CHECK(gho_generating_function(0.0, 1.3, x) == 0.0);
  CHECK(gho_generating_function(std::numbers::pi / 2, 1.0, x) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));

  // S(phi + 2 pi) - S(phi) = 2 pi I
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const GhoPoint xr = testsupport::random_gho(rng);
    const double action = testsupport::uniform(rng, 0.2, 3.0);
    const double phi = testsupport::uniform(rng, 0.0, kTwoPi);
    const double step = gho_generating_function(phi + kTwoPi, action, xr) -
                        gho_generating_function(phi, action, xr);
    CHECK(step == doctest::Approx(kTwoPi * action).epsilon(1e-12));
  }
}

TEST_CASE("generators of the plain model") {
  const GhoPoint x(1.0, 0.0, 1.0);
  const auto g = gho_generators(std::numbers::pi / 4, 1.0, x);
  CHECK(g[0] == doctest::Approx(-0.25).epsilon(1e-15));

  const auto g0 = gho_generators(0.0, 1.0, x);
  CHECK(g0[0] == 0.0);
  CHECK(g0[1] == 0.0);
  CHECK(g0[2] == 0.0);

  // dG_1/dp at the mapped point equals (d_X q)_{phi,I}
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const GhoPoint xr = testsupport::random_gho(rng);
    const double action = testsupport::uniform(rng, 0.3, 2.0);
    const double phi = testsupport::uniform(rng, 0.0, kTwoPi);
    const PhaseState s = gho_action_angle_map(phi, action, xr);
    const GhoLinPoint lifted(0.0, xr.X, xr.Y, xr.Z);
    const double hp = 1e-5 * (1.0 + std::abs(s.p));
    const double dG1_dp =
        (gholin_generator_phase_space(1, s.q, s.p + hp, lifted) -
         gholin_generator_phase_space(1, s.q, s.p - hp, lifted)) /
        (2 * hp);
    const double hx = 1e-5 * (1.0 + std::abs(xr.X));
    const double dq_dX =
        (gho_action_angle_map(phi, action, GhoPoint(xr.X + hx, xr.Y, xr.Z)).q -
         gho_action_angle_map(phi, action, GhoPoint(xr.X - hx, xr.Y, xr.Z)).q) /
        (2 * hx);
    CHECK(dG1_dp == doctest::Approx(dq_dX).epsilon(1e-6));
  }
}

TEST_CASE("closed metric of the plain model") {
  const GhoPoint x(1.0, 0.0, 1.0);
  const auto g = gho_metric_closed(1.0, x);
  CHECK(g.components(0, 0) == 1.0 / 32);
  CHECK(g.components(1, 1) == 1.0 / 8);
  CHECK(g.components(2, 2) == 1.0 / 32);
  CHECK(g.components(0, 2) == -1.0 / 32);

  // overall I^2 scaling
  const auto g2 = gho_metric_closed(2.0, x);
  CHECK((g2.components - 4.0 * g.components).cwiseAbs().maxCoeff() == 0.0);

  // equals the sampled covariance
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    const GhoPoint xr = testsupport::random_gho(rng);
    const double action = testsupport::uniform(rng, 0.3, 2.0);
    const auto closed = gho_metric_closed(action, xr);
    const auto sampled = metric_from_generators(
        sample_gho_generators(action, xr, 64), xr.as_parameter_point(), action);
    CHECK((closed.components - sampled.components).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("connection and curvature of the plain model") {
  const GhoPoint x(1.0, 0.0, 1.0);
  const auto [a, f] = gho_hannay(1.0, x);
  CHECK(a.components(1) == 0.5);
  CHECK(f.components(0, 1) == -0.25);

  SUBCASE("Y = 0 kills the third component") {
    CHECK(a.components(2) == 0.0);
    CHECK(f.components(0, 2) == 0.0);
  }

  SUBCASE("curvature is the exterior derivative of the connection") {
    Rng rng(9);
    for (int t = 0; t < 20; ++t) {
      const GhoPoint xr = testsupport::random_gho(rng);
      const double action = testsupport::uniform(rng, 0.3, 2.0);
      const auto [ar, fr] = gho_hannay(action, xr);
      const std::array<double, 3> v = {xr.X, xr.Y, xr.Z};
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          auto a_comp = [&](int comp, int along, double value) {
            std::array<double, 3> w = v;
            w[along] = value;
            return gho_hannay(action, GhoPoint(w[0], w[1], w[2]))
                .first.components(comp);
          };
          const double hi = 1e-5 * (1.0 + std::abs(v[i]));
          const double hj = 1e-5 * (1.0 + std::abs(v[j]));
          const double dAj_di =
              (a_comp(j, i, v[i] + hi) - a_comp(j, i, v[i] - hi)) / (2 * hi);
          const double dAi_dj =
              (a_comp(i, j, v[j] + hj) - a_comp(i, j, v[j] - hj)) / (2 * hj);
          CHECK(fr.components(i, j) == doctest::Approx(dAj_di - dAi_dj).epsilon(1e-7));
        }
    }
  }
}

TEST_CASE("action-angle map of the linear-term model") {
  SUBCASE("W = 0 reduces to the plain map") {
    Rng rng(10);
    for (int t = 0; t < 20; ++t) {
      const GhoPoint xr = testsupport::random_gho(rng);
      const GhoLinPoint xl(0.0, xr.X, xr.Y, xr.Z);
      const double action = testsupport::uniform(rng, 0.3, 2.0);
      const double phi = testsupport::uniform(rng, 0.0, kTwoPi);
      const PhaseState a = gho_action_angle_map(phi, action, xr);
      const PhaseState b = gholin_action_angle_map(phi, action, xl);
      CHECK(a.q == b.q);
      CHECK(a.p == b.p);
    }
  }

  SUBCASE("value at phi = 0 for (W,X,Y,Z) = (1,1,0,1)") {
    const PhaseState s = gholin_action_angle_map(0.0, 1.0, GhoLinPoint(1, 1, 0, 1));
    CHECK(s.q == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(s.p == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  }

  SUBCASE("H = w I - W^2 Z / (2 w^2), angle independent") {
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
      const GhoLinPoint x = testsupport::random_gholin(rng);
      const double action = testsupport::uniform(rng, 0.2, 3.0);
      const double phi = testsupport::uniform(rng, 0.0, kTwoPi);
      const PhaseState s = gholin_action_angle_map(phi, action, x);
      const double w = x.omega();
      const double expected = w * action - 0.5 * x.W * x.W * x.Z / (w * w);
      CHECK(gholin_hamiltonian(x, s) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("canonicity: {q, p} = 1 by finite differences for both models") {
  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    const double action = testsupport::uniform(rng, 0.3, 2.0);
    const double phi = testsupport::uniform(rng, 0.0, kTwoPi);
    const double hphi = 1e-6;
    const double hI = 1e-6 * (1.0 + action);

    const GhoPoint xg = testsupport::random_gho(rng);
    auto mapg = [&](double f, double i) { return gho_action_angle_map(f, i, xg); };
    double dq_df = (mapg(phi + hphi, action).q - mapg(phi - hphi, action).q) / (2 * hphi);
    double dq_dI = (mapg(phi, action + hI).q - mapg(phi, action - hI).q) / (2 * hI);
    double dp_df = (mapg(phi + hphi, action).p - mapg(phi - hphi, action).p) / (2 * hphi);
    double dp_dI = (mapg(phi, action + hI).p - mapg(phi, action - hI).p) / (2 * hI);
    CHECK(dq_df * dp_dI - dq_dI * dp_df == doctest::Approx(1.0).epsilon(1e-8));

    const GhoLinPoint xl = testsupport::random_gholin(rng);
    auto mapl = [&](double f, double i) { return gholin_action_angle_map(f, i, xl); };
    dq_df = (mapl(phi + hphi, action).q - mapl(phi - hphi, action).q) / (2 * hphi);
    dq_dI = (mapl(phi, action + hI).q - mapl(phi, action - hI).q) / (2 * hI);
    dp_df = (mapl(phi + hphi, action).p - mapl(phi - hphi, action).p) / (2 * hphi);
    dp_dI = (mapl(phi, action + hI).p - mapl(phi, action - hI).p) / (2 * hI);
    CHECK(dq_df * dp_dI - dq_dI * dp_df == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("generators of the linear-term model") {
  SUBCASE("W = 0 reduces to the plain generators, with G_0 = -(Z/w^2)(p + Yq/Z)") {
    Rng rng(14);
    for (int t = 0; t < 20; ++t) {
      const GhoPoint xr = testsupport::random_gho(rng);
      const GhoLinPoint xl(0.0, xr.X, xr.Y, xr.Z);
      const double action = testsupport::uniform(rng, 0.3, 2.0);
      const double phi = testsupport::uniform(rng, 0.0, kTwoPi);
      const auto g3 = gho_generators(phi, action, xr);
      const auto g4 = gholin_generators(phi, action, xl);
      for (int i = 0; i < 3; ++i)
        CHECK(g4[i + 1] == doctest::Approx(g3[i]).epsilon(1e-13));
      const PhaseState s = gho_action_angle_map(phi, action, xr);
      const double w2 = xr.omega() * xr.omega();
      CHECK(g4[0] ==
            doctest::Approx(-(xr.Z / w2) * (s.p + xr.Y * s.q / xr.Z)).epsilon(1e-13));
    }
  }

  SUBCASE("value at phi = 0 for (W,X,Y,Z) = (1,1,0,1)") {
    // f_0 = g_0 = 0, h_0 = -Z/w^2 = -1, so G_0 = -(p + 0) = -sqrt(2)
    const auto g = gholin_generators(0.0, 1.0, GhoLinPoint(1, 1, 0, 1));
    CHECK(g[0] == doctest::Approx(-std::numbers::sqrt2).epsilon(1e-15));
  }
}

TEST_CASE("closed metric of the linear-term model") {
  const GhoLinPoint x(1.0, 1.0, 0.0, 1.0);
  const auto g = gholin_metric_closed(1.0, x);
  CHECK(g.components(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.components(0, 1) == doctest::Approx(-1.0).epsilon(1e-15));

  SUBCASE("W = 0 embeds the plain metric with g_00 = Z I / w^3") {
    Rng rng(15);
    for (int t = 0; t < 20; ++t) {
      const GhoPoint xr = testsupport::random_gho(rng);
      const GhoLinPoint xl(0.0, xr.X, xr.Y, xr.Z);
      const double action = testsupport::uniform(rng, 0.3, 2.0);
      const auto gl = gholin_metric_closed(action, xl);
      const auto gq = gho_metric_closed(action, xr);
      CHECK((gl.components.block<3, 3>(1, 1) - gq.components).cwiseAbs().maxCoeff() <
            1e-16);
      CHECK(gl.components.row(0).tail(3).cwiseAbs().maxCoeff() == 0.0);
      const double w = xr.omega();
      CHECK(gl.components(0, 0) ==
            doctest::Approx(xr.Z * action / (w * w * w)).epsilon(1e-15));
    }
  }

  SUBCASE("equals the sampled covariance") {
    Rng rng(16);
    for (int t = 0; t < 20; ++t) {
      const GhoLinPoint xr = testsupport::random_gholin(rng);
      const double action = testsupport::uniform(rng, 0.3, 2.0);
      const auto closed = gholin_metric_closed(action, xr);
      const auto sampled =
          metric_from_generators(sample_gholin_generators(action, xr, 64),
                                 xr.as_parameter_point(), action);
      const double scale = closed.components.cwiseAbs().maxCoeff();
      CHECK((closed.components - sampled.components).cwiseAbs().maxCoeff() <
            1e-13 * scale);
    }
  }
}

TEST_CASE("connection and curvature of the linear-term model") {
  const GhoLinPoint x(1.0, 1.0, 0.0, 1.0);
  const auto [a, f] = gholin_hannay(1.0, x);
  CHECK(a.components(0) == 0.0);
  CHECK(a.components(1) == 0.0);
  CHECK(a.components(2) == doctest::Approx(1.0).epsilon(1e-15));

  SUBCASE("W = 0 reduces to the plain forms") {
    const GhoPoint xq(1.3, 0.25, 0.8);
    const GhoLinPoint xl(0.0, xq.X, xq.Y, xq.Z);
    const auto [al, fl] = gholin_hannay(0.7, xl);
    const auto [aq, fq] = gho_hannay(0.7, xq);
    CHECK((al.components.tail(3) - aq.components).cwiseAbs().maxCoeff() == 0.0);
    CHECK((fl.components.block<3, 3>(1, 1) - fq.components).cwiseAbs().maxCoeff() ==
          0.0);
    CHECK(fl.components.row(0).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("curvature is the exterior derivative of the connection") {
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
      const GhoLinPoint xr = testsupport::random_gholin(rng);
      const double action = testsupport::uniform(rng, 0.3, 2.0);
      const auto [ar, fr] = gholin_hannay(action, xr);
      const std::array<double, 4> v = {xr.W, xr.X, xr.Y, xr.Z};
      auto a_comp = [&](int comp, int along, double value) {
        std::array<double, 4> w = v;
        w[along] = value;
        return gholin_hannay(action, GhoLinPoint(w[0], w[1], w[2], w[3]))
            .first.components(comp);
      };
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          const double hi = 1e-5 * (1.0 + std::abs(v[i]));
          const double hj = 1e-5 * (1.0 + std::abs(v[j]));
          const double dAj_di =
              (a_comp(j, i, v[i] + hi) - a_comp(j, i, v[i] - hi)) / (2 * hi);
          const double dAi_dj =
              (a_comp(i, j, v[j] + hj) - a_comp(i, j, v[j] - hj)) / (2 * hj);
          CHECK(fr.components(i, j) ==
                doctest::Approx(dAj_di - dAi_dj).epsilon(1e-7).scale(1.0));
        }
    }
  }
}

TEST_CASE("angle-origin shifts leave the metric alone but move the raw moment") {
  Rng rng(18);
  constexpr int m = 64;
  for (int t = 0; t < 10; ++t) {
    const GhoPoint x = testsupport::random_gho(rng);
    const double action = testsupport::uniform(rng, 0.5, 2.0);
    const double c1 = testsupport::uniform(rng, -1.0, 1.0);
    const double c2 = testsupport::uniform(rng, 0.5, 1.5);
    // lambda(I; x) = c1 I^2 + c2 I X: phi shift b = dlambda/dI, G shift -d_i lambda
    const double b = 2.0 * c1 * action + c2 * x.X;

    GeneratorSamples orig(3, m), shifted(3, m);
    for (int c = 0; c < m; ++c) {
      const double phi = kTwoPi * c / m;
      const auto g0 = gho_generators(phi, action, x);
      const auto g1 = gho_generators(phi - b, action, x);
      for (int i = 0; i < 3; ++i) {
        orig.values(i, c) = g0[i];
        shifted.values(i, c) = g1[i] - (i == 0 ? c2 * action : 0.0);
      }
    }
    const auto pt = x.as_parameter_point();
    const auto m0 = metric_from_generators(orig, pt, action);
    const auto m1 = metric_from_generators(shifted, pt, action);
    CHECK((m0.components - m1.components).cwiseAbs().maxCoeff() < 1e-10);

    double raw0 = 0.0, raw1 = 0.0;  // the (X, Y) second moment alone
    for (int c = 0; c < m; ++c) {
      raw0 += orig.values(0, c) * orig.values(1, c);
      raw1 += shifted.values(0, c) * shifted.values(1, c);
    }
    CHECK(std::abs(raw1 - raw0) / m > 1e-3);
  }
}
