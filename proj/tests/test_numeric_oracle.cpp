#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adiageo/numeric_oracle.hpp"
#include "adiageo/quartic.hpp"
#include "test_support.hpp"

#include <cmath>
#include <numbers>

using namespace adiageo;
using oracle::Model;
using testsupport::Rng;

TEST_CASE("displacement identities hold by finite differences") {
  Rng rng(51);

  SUBCASE("plain model, random points") {
    for (int t = 0; t < 100; ++t) {
      const GhoPoint x = testsupport::random_gho(rng, 0.25);
      const double phi = testsupport::uniform(rng, 0.0, 2 * std::numbers::pi);
      const double action = testsupport::uniform(rng, 0.5, 2.0);
      CHECK(oracle::generator_displacement_check(Model::gho, phi, action,
                                                 {x.X, x.Y, x.Z}) < 1e-6);
    }
  }

  SUBCASE("q-equation at phi = 0 for the X index is 0 = 0") {
    const PhaseState s = gho_action_angle_map(0.0, 1.0, GhoPoint(1, 0, 1));
    CHECK(s.q == 0.0);
    const double hx = 1e-5 * 2.0;
    const double dq_dX =
        (gho_action_angle_map(0.0, 1.0, GhoPoint(1 + hx, 0, 1)).q -
         gho_action_angle_map(0.0, 1.0, GhoPoint(1 - hx, 0, 1)).q) /
        (2 * hx);
    CHECK(std::abs(dq_dX) < 1e-14);
    const GhoLinPoint lifted(0.0, 1.0, 0.0, 1.0);
    const double hp = 1e-5 * (1.0 + std::abs(s.p));
    const double dG1_dp =
        (gholin_generator_phase_space(1, s.q, s.p + hp, lifted) -
         gholin_generator_phase_space(1, s.q, s.p - hp, lifted)) /
        (2 * hp);
    CHECK(std::abs(dG1_dp) < 1e-14);
  }

  SUBCASE("linear-term model, all four indices, random points") {
    for (int t = 0; t < 100; ++t) {
      const GhoLinPoint x = testsupport::random_gholin(rng, 0.25);
      const double phi = testsupport::uniform(rng, 0.0, 2 * std::numbers::pi);
      const double action = testsupport::uniform(rng, 0.5, 2.0);
      CHECK(oracle::generator_displacement_check(Model::gho_linear, phi, action,
                                                 {x.W, x.X, x.Y, x.Z}) < 1e-6);
    }
  }
}

TEST_CASE("sampled metrics agree with the closed forms") {
  const auto g = oracle::numeric_metric(Model::gho, 1.0, {1.0, 0.0, 1.0}, 64);
  const auto c = gho_metric_closed(1.0, GhoPoint(1, 0, 1));
  CHECK((g.components - c.components).cwiseAbs().maxCoeff() < 1e-13);

  // W = 0 reproduces the plain block structure
  const auto gl = oracle::numeric_metric(Model::gho_linear, 1.0,
                                         {0.0, 1.3, 0.2, 0.9}, 64);
  const auto cq = gho_metric_closed(1.0, GhoPoint(1.3, 0.2, 0.9));
  CHECK((gl.components.block<3, 3>(1, 1) - cq.components).cwiseAbs().maxCoeff() <
        1e-13);
  CHECK(gl.components.row(0).tail(3).cwiseAbs().maxCoeff() < 1e-15);

  // quartic series generators at small coupling
  const QuarticPoint xq(1.0, 1.0, 0.01);
  const auto gq = oracle::numeric_metric_quartic(1.0, xq, 256);
  const auto cqq = quartic::metric_closed(1.0, xq);
  CHECK((gq.components - cqq.components).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("gauge experiment: invariant metric, moving raw moment") {
  SUBCASE("zero shift changes nothing at all") {
    const auto res = oracle::gauge_invariance_experiment(
        Model::gho, oracle::GaugeShift{}, 1.0, {1.0, 0.0, 1.0});
    CHECK(res.metric_deviation == 0.0);
    CHECK(res.raw_term_deviation == 0.0);
  }

  SUBCASE("lambda(I;x) = I^2 + I X at the reference point") {
    oracle::GaugeShift shift{1.0, 1.0, 0};
    const auto res = oracle::gauge_invariance_experiment(Model::gho, shift, 1.0,
                                                         {1.0, 0.0, 1.0});
    CHECK(res.metric_deviation < 1e-10);
    CHECK(res.raw_term_deviation > 1e-3);
  }

  SUBCASE("a pure action shift moves neither (the average sees a full period)") {
    oracle::GaugeShift shift{0.7, 0.0, 0};
    const auto res = oracle::gauge_invariance_experiment(Model::gho, shift, 1.0,
                                                         {1.0, 0.0, 1.0});
    CHECK(res.metric_deviation < 1e-13);
    CHECK(res.raw_term_deviation < 1e-13);
  }

  SUBCASE("twenty random shifts on both models") {
    Rng rng(52);
    for (int t = 0; t < 20; ++t) {
      oracle::GaugeShift shift;
      shift.c1 = testsupport::uniform(rng, -1.0, 1.0);
      shift.c2 = testsupport::uniform(rng, 0.5, 1.5);
      const double action = testsupport::uniform(rng, 0.5, 2.0);
      const GhoPoint x = testsupport::random_gho(rng);
      shift.param_index = 0;
      auto res = oracle::gauge_invariance_experiment(Model::gho, shift, action,
                                                     {x.X, x.Y, x.Z});
      CHECK(res.metric_deviation < 1e-10);
      CHECK(res.raw_term_deviation > 1e-3);

      const GhoLinPoint xl = testsupport::random_gholin(rng);
      shift.param_index = 1;
      res = oracle::gauge_invariance_experiment(Model::gho_linear, shift, action,
                                                {xl.W, xl.X, xl.Y, xl.Z});
      CHECK(res.metric_deviation < 1e-10);
      CHECK(res.raw_term_deviation > 1e-3);
    }
  }
}

TEST_CASE("ramp schedules validate their domain") {
  oracle::RampSchedule ramp{{1.0, 0.0, 1.0}, {0.2, 0.9, 1.0}, 10.0};
  // midway this ramp has X Z - Y^2 < 0
  const PhaseState s0 = gho_action_angle_map(0.0, 1.0, GhoPoint(1, 0, 1));
  CHECK_THROWS_AS(oracle::adiabatic_action_drift(Model::gho, ramp, s0, 200),
                  std::invalid_argument);

  oracle::RampSchedule bad_time{{1.0, 0.0, 1.0}, {1.0, 0.0, 1.0}, 0.0};
  CHECK_THROWS_AS(bad_time.at(0.0), std::invalid_argument);
}

TEST_CASE("smoothstep ramp endpoints and monotone interpolation") {
  oracle::RampSchedule ramp{{1.0, 0.0, 1.0}, {2.0, 0.0, 1.0}, 100.0};
  CHECK(ramp.at(0.0)[0] == 1.0);
  CHECK(ramp.at(100.0)[0] == 2.0);
  CHECK(ramp.at(50.0)[0] == doctest::Approx(1.5));
  CHECK(ramp.at(-5.0)[0] == 1.0);    // clamped
  CHECK(ramp.at(105.0)[0] == 2.0);   // clamped
}

TEST_CASE("action integral of the energy") {
  SUBCASE("harmonic potential gives I = E/w0") {
    auto v = [](double q) { return 0.5 * q * q; };
    CHECK(oracle::numeric_action_of_energy(v, 1.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(oracle::numeric_action_of_energy(v, 1.0, 2.5) ==
          doctest::Approx(2.5).epsilon(1e-10));
  }
  SUBCASE("energy at the potential minimum has zero action") {
    auto v = [](double q) { return 0.5 * q * q; };
    CHECK(oracle::numeric_action_of_energy(v, 1.0, 0.0) == 0.0);
  }
  SUBCASE("energy below the minimum has no turning points") {
    auto v = [](double q) { return 0.5 * q * q; };
    CHECK_THROWS_AS(oracle::numeric_action_of_energy(v, 1.0, -0.5),
                    std::invalid_argument);
  }
  SUBCASE("asymmetric well") {
    // V = (q - 1)^2/2: same spectrum as the centered well
    auto v = [](double q) { return 0.5 * (q - 1.0) * (q - 1.0); };
    CHECK(oracle::numeric_action_of_energy(v, 1.0, 0.8) ==
          doctest::Approx(0.8).epsilon(1e-10));
  }
}
