#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polygas/errors.hpp"
#include "polygas/fourteen_moment.hpp"
#include "polygas/six_field.hpp"
#include "polygas/special_fn.hpp"

using namespace polygas;

TEST_CASE("n constants") {
  const auto n = n_constants(0.0, 1.0);
  CHECK(n.n1 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(n.n2 == doctest::Approx(std::pow(std::numbers::pi, 2) / 4).epsilon(1e-14));
}

TEST_CASE("production coefficients are dissipative on the grid") {
  for (double a : {-0.5, 0.0, 0.5, 1.0, 2.0, 5.0})
    for (double g : {0.1, 0.5, 1.0, 2.0, 4.0}) {
      const auto sp = SpeciesParams::dimensionless(a);
      const auto in = InteractionParams::constant_K(g, 1.0);
      const auto c = production_coeffs_14(HydroState::equilibrium(1, 1), sp, in);
      CHECK(c.P_dev_coeff < 0);
      CHECK(c.P_Pi_coeff < 0);
      CHECK(c.Q_q_coeff < 0);
    }
}

TEST_CASE("production terms: zero, linearity, trace, Galilean structure") {
  const auto sp = SpeciesParams::dimensionless(0.5);
  const auto in = InteractionParams::constant_K(1.5, 0.8);
  HydroState h = HydroState::equilibrium(1.2, 0.9);
  auto r = production_14(h, sp, in);
  for (int i = 0; i < 9; ++i) CHECK(r.P.a[i] == 0.0);
  for (int i = 0; i < 3; ++i) CHECK(r.Q[i] == 0.0);

  h.p_dev(0, 1) = h.p_dev(1, 0) = 0.01;
  const double P12 = production_14(h, sp, in).P(0, 1);
  h.p_dev(0, 1) = h.p_dev(1, 0) = 0.02;
  CHECK(production_14(h, sp, in).P(0, 1) == doctest::Approx(2 * P12).epsilon(1e-14));

  h.Pi = 0.005;
  h.p_dev = Mat3{};
  const auto rt = relaxation_times(h, sp, in);
  r = production_14(h, sp, in);
  CHECK(r.P.trace() == doctest::Approx(-3 * h.Pi / rt.tau_Pi).epsilon(1e-12));

  h.q = {0.01, -0.02, 0.005};
  h.p_dev(0, 0) = 0.01;
  h.p_dev(1, 1) = -0.01;
  h.p_dev(0, 2) = h.p_dev(2, 0) = 0.003;
  h.U = {};
  const auto r0 = production_14(h, sp, in);
  h.U = {100, -50, 3};
  const auto r1 = production_14(h, sp, in);
  for (int i = 0; i < 3; ++i) {
    double conv = 0;
    for (int k = 0; k < 3; ++k) conv += h.U[k] * r1.P(k, i);
    CHECK(r1.Q[i] - conv == doctest::Approx(r0.Q[i]).epsilon(1e-12));
  }
}

TEST_CASE("tabulated kernel is rejected by the fourteen-moment closure") {
  const auto sp = SpeciesParams::dimensionless(0.0);
  InteractionParams in{1.0, AngularKernel::tabulated({1.0, 2.0})};
  CHECK_THROWS_AS(production_coeffs_14(HydroState::equilibrium(1, 1), sp, in), Error);
}

TEST_CASE("transport coefficients: positivity and internal consistency") {
  for (double a : {-0.5, 0.0, 0.5, 2.0, 5.0})
    for (double g : {0.2, 1.0, 2.153, 4.0}) {
      SpeciesParams sp{"x", 3.3e-26, a, kBoltzmannSI, std::nullopt};
      const auto in = InteractionParams::constant_K(g, 2e-17);
      const auto h = HydroState::equilibrium(0.9, 350.0);
      const auto t = transport_coefficients(h, sp, in);
      CHECK(t.mu > 0);
      CHECK(t.nu_bulk > 0);
      CHECK(t.kappa > 0);
      CHECK(t.tau_s > 0);
      CHECK(t.tau_Pi > 0);
      CHECK(t.tau_q > 0);
      const double p = h.p(sp);
      CHECK(t.Pr == doctest::Approx((a + 3.5) * sp.k / sp.m * t.mu / t.kappa).epsilon(1e-12));
      CHECK(t.Pr == doctest::Approx(prandtl_model(a, g)).epsilon(1e-12));
      CHECK(t.mu == doctest::Approx(p * t.tau_s).epsilon(1e-12));
      CHECK(t.nu_bulk == doctest::Approx(4 * (a + 1) / (3 * (2 * a + 5)) * p * t.tau_Pi).epsilon(1e-12));
      CHECK(t.kappa == doctest::Approx((a + 3.5) * p * p / (h.rho * h.T) * t.tau_q).epsilon(1e-12));
      // the fourteen-moment tau_Pi is three times the six-field one
      CHECK(t.tau_Pi == doctest::Approx(3 * tau_Pi_six(h, sp, in)).epsilon(1e-12));
    }
}

TEST_CASE("viscosity temperature exponent") {
  const auto sp = SpeciesParams::dimensionless(0.5);
  const double g = 0.6;
  const auto in = InteractionParams::constant_K(g, 1.0);
  const double mu1 = transport_coefficients(HydroState::equilibrium(1, 1.0), sp, in).mu;
  const double mu2 = transport_coefficients(HydroState::equilibrium(3, 2.5), sp, in).mu;
  CHECK(mu2 / mu1 == doctest::Approx(std::pow(2.5, 1 - g / 2)).epsilon(1e-12));
}

TEST_CASE("Eucken Prandtl number") {
  CHECK(eucken_Pr(0.0) == doctest::Approx(14.0 / 19.0).epsilon(1e-15));
  CHECK(eucken_Pr(2.0) == doctest::Approx(22.0 / 27.0).epsilon(1e-15));
  CHECK(eucken_Pr(5.0) == doctest::Approx(34.0 / 39.0).epsilon(1e-15));
}

TEST_CASE("Delta is base-state independent") {
  const auto in = InteractionParams::constant_K(1.7, 1.0);
  SpeciesParams sp{"x", 5e-26, 1.0, kBoltzmannSI, std::nullopt};
  const double d1 = delta_Pr(1.7, 1.0, HydroState::equilibrium(1.0, 300.0), sp, in);
  const double d2 = delta_Pr(1.7, 1.0, HydroState::equilibrium(0.1, 900.0), sp, InteractionParams::constant_K(1.7, 5.0));
  CHECK(std::abs(d1 - d2) < 1e-12);
  CHECK(std::abs(d1 - delta_Pr(1.7, 1.0)) < 1e-12);
  CHECK(std::abs(delta_Pr(2.153, 0.0)) < 1e-3);
  CHECK(std::abs(delta_Pr(4.063, 2.0)) < 1e-2);
}

TEST_CASE("gamma star") {
  CHECK(std::abs(solve_gamma_star(0.0) - 2.153) <= 1e-3);
  CHECK(std::abs(solve_gamma_star(0.5) - 2.368) <= 1e-3);
  CHECK(std::abs(solve_gamma_star(2.0) - 4.063) <= 5e-3);
  CHECK(std::abs(solve_gamma_star(3.5) - 9.469) <= 1e-2);
  for (double a : {0.0, 0.5, 2.0, 12.5}) CHECK(std::abs(delta_Pr(solve_gamma_star(a), a)) < 1e-8);
  CHECK(std::abs(solve_gamma_star(0.0, {2.0, 3.0}) - solve_gamma_star(0.0)) < 1e-9);
  try {
    solve_gamma_star(0.0, {0.5, 1.5});
    FAIL("expected NoSignChange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSignChange);
  }
}

TEST_CASE("s to gamma") {
  CHECK(s_to_gamma(0.668) == doctest::Approx(0.664).epsilon(1e-12));
  CHECK(s_to_gamma(0.5) == 1.0);
  CHECK(s_to_gamma(0.933) == doctest::Approx(0.134).epsilon(1e-12));
  CHECK_THROWS_AS(s_to_gamma(1.0), Error);
  CHECK_THROWS_AS(s_to_gamma(1.2), Error);
}

TEST_CASE("closure fluxes") {
  const auto sp = SpeciesParams::dimensionless(1.0);
  HydroState h = HydroState::equilibrium(2.0, 1.5);
  const double p = h.p(sp);
  auto f = closure_fluxes_14(h, sp);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(f.q_ij(i, j) == doctest::Approx((i == j) * 4.5 * p * p / h.rho));
      for (int k = 0; k < 3; ++k) CHECK(f.p_ijk[i][j][k] == 0.0);
    }
  h.q = {0.0, 0.9, 0.0};
  f = closure_fluxes_14(h, sp);
  CHECK(f.p_ijk[1][1][1] == doctest::Approx(3 * 0.9 / 4.5));
  CHECK(f.p_ijk[0][0][1] == doctest::Approx(0.9 / 4.5));
  CHECK(f.p_ijk[0][1][2] == 0.0);
}

TEST_CASE("delta scan") {
  const auto pts = delta_scan({0.0, 0.5}, {0.5, 1.0, 1.5});
  REQUIRE(pts.size() == 6);
  CHECK(pts[4].alpha == 0.5);
  CHECK(pts[4].gamma == 1.0);
  CHECK(pts[4].delta == doctest::Approx(delta_Pr(1.0, 0.5)).epsilon(1e-15));
}
