#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polygas/errors.hpp"
#include "polygas/fourteen_moment.hpp"
#include "polygas/six_field.hpp"
#include "polygas/special_fn.hpp"

using namespace polygas;

namespace {

HydroState state(const SpeciesParams& sp, double rho, double p, double x) {
  return HydroState::from_pressure(rho, p, sp, x * p);
}

double upper(double alpha) { return 2.0 / 3.0 * (alpha + 1.0); }

}  // namespace

TEST_CASE("k constants") {
  const auto k = k_constants(0.0, 1.0);
  CHECK(k.k1 == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(k.k2 == doctest::Approx(15.0 * std::numbers::sqrt2 * std::numbers::pi * std::numbers::pi / 32.0).epsilon(1e-14));
  for (double a : {-0.5, 0.0, 1.0, 5.0, 12.5})
    for (double g : {0.1, 1.0, 4.0, 20.0}) {
      const auto kk = k_constants(a, g);
      CHECK(kk.k1 > 0);
      CHECK(kk.k2 > 0);
    }
}

TEST_CASE("production term: zero, sign, window") {
  const auto sp = SpeciesParams::dimensionless(0.5);
  const auto in = InteractionParams::constant_K(1.0, 1.0);
  CHECK(production_P(state(sp, 1, 1, 0.0), sp, in).P == 0.0);
  for (double x = -0.99; x < upper(0.5); x += 0.01) {
    const auto r = production_P(state(sp, 1.2, 0.8, x), sp, in);
    CHECK(r.C_P > 0.0);
    CHECK(r.P * x <= 0.0);
  }
  CHECK_THROWS_AS(production_P(state(sp, 1, 1, -1.0), sp, in), Error);
  CHECK_THROWS_AS(production_P(state(sp, 1, 1, upper(0.5)), sp, in), Error);
  try {
    production_P(state(sp, 1, 1, 2.0), sp, in);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfValidityWindow);
  }
}

TEST_CASE("entropy production is nonnegative and equals (1/3) dK/dPi P") {
  for (double a : {0.0, 0.5, 1.0, 2.0})
    for (double g : {0.5, 1.0, 2.0}) {
      const auto sp = SpeciesParams::dimensionless(a);
      const auto in = InteractionParams::constant_K(g, 1.0);
      const double lo = -1.0 + 1e-6, hi = upper(a) - 1e-6;
      for (int i = 0; i < 1000; ++i) {
        const double x = lo + (hi - lo) * (i + 0.5) / 1000.0;
        const auto h = state(sp, 1.0, 1.0, x);
        const double S = entropy_production_Sigma(h, sp, in);
        CHECK(S >= 0.0);
        const double alt = dK_dPi(h, sp) * production_P(h, sp, in).P / 3.0;
        CHECK(std::abs(S - alt) <= 1e-12 * std::abs(S) + 1e-300);
      }
    }
}

TEST_CASE("nonequilibrium entropy and its derivative") {
  const auto sp = SpeciesParams::dimensionless(0.5);
  CHECK(K_noneq(state(sp, 1, 1, 0.0), sp) == 0.0);
  CHECK(dK_dPi(state(sp, 1, 1, 0.0), sp) == 0.0);
  for (double x = -0.95; x < upper(0.5) - 0.02; x += 0.05) {
    if (std::abs(x) < 1e-9) continue;
    const double p = 0.7;
    const auto h = state(sp, 1.3, p, x);
    CHECK(K_noneq(h, sp) < 0.0);
    CHECK(dK_dPi(h, sp) * x < 0.0);
    const double hh = 1e-6 * p;
    auto Kx = [&](double Pi) { return K_noneq(HydroState::from_pressure(1.3, p, sp, Pi), sp); };
    const double fd = (Kx(h.Pi + hh) - Kx(h.Pi - hh)) / (2 * hh);
    CHECK(dK_dPi(h, sp) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("K satisfies its PDE") {
  for (double a : {0.0, 0.5, 2.0}) {
    const auto sp = SpeciesParams::dimensionless(a);
    for (double rho : {0.5, 1.0, 2.0, 4.0})
      for (double p : {0.3, 1.0, 3.0})
        for (double x : {-0.8, -0.3, 0.0, 0.2, 0.5}) {
          const auto h = state(sp, rho, p, x);
          CHECK(std::abs(K_pde_residual(h, sp)) < 1e-6 * sp.k * rho / sp.m);
        }
    CHECK(K_pde_residual(state(sp, 1.0, 1.0, 0.0), sp) == 0.0);
  }
  // residual scales with rho
  const auto sp = SpeciesParams::dimensionless(0.0);
  SpeciesParams spm = sp;
  spm.m = 2.0;
  const double r1 = K_pde_residual(state(spm, 1.0, 1.0, 0.3), spm);
  const double r2 = K_pde_residual(state(spm, 2.0, 1.0, 0.3), spm);
  CHECK(std::abs(r2 - 2 * r1) < 1e-9);
}

TEST_CASE("relaxation time is the linear rate of the production") {
  for (double a : {0.0, 0.5, 2.0})
    for (double g : {0.5, 1.0, 2.0}) {
      const auto sp = SpeciesParams::dimensionless(a);
      const auto in = InteractionParams::constant_K(g, 0.7);
      const auto h = state(sp, 1.4, 0.9, 1e-6);
      const double tau = tau_Pi_six(h, sp, in);
      CHECK(tau > 0);
      CHECK(-production_P(h, sp, in).P / h.Pi == doctest::Approx(1.0 / tau).epsilon(1e-4));
      // bulk viscosity identity; the trace production of the 14-field system is -3 Pi / tau_Pi(14)
      const auto eq = state(sp, 1.4, 0.9, 0.0);
      const auto t14 = transport_coefficients(eq, sp, in);
      CHECK(t14.tau_Pi == doctest::Approx(3 * tau).epsilon(1e-12));
      CHECK(t14.nu_bulk == doctest::Approx(4 * (a + 1) / (3 * (2 * a + 5)) * 0.9 * t14.tau_Pi).epsilon(1e-12));
    }
}

TEST_CASE("space-homogeneous relaxation") {
  const auto sp = SpeciesParams::dimensionless(0.0);
  const auto in = InteractionParams::constant_K(1.0, 1.0);
  const double tau = tau_Pi_six(state(sp, 1, 1, 0), sp, in);

  SUBCASE("fixed point") {
    const auto tr = relax_homogeneous(state(sp, 1, 1, 0.0), sp, in, {5 * tau, tau / 10});
    for (const auto& s : tr) CHECK(s.Pi == 0.0);
  }
  SUBCASE("small amplitude follows the exponential") {
    // dPi/dt = P/3 = -Pi/(3 tau): the decay time of Pi is 3 tau
    const double td = 3 * tau;
    CHECK(td == doctest::Approx(relaxation_times(state(sp, 1, 1, 0), sp, in).tau_Pi).epsilon(1e-12));
    const double Pi0 = 1e-4;
    const auto tr = relax_homogeneous(state(sp, 1, 1, Pi0), sp, in, {5 * td, td / 50});
    CHECK(tr.size() == 251);
    for (const auto& s : tr) CHECK(std::abs(s.Pi / (Pi0 * std::exp(-s.t / td)) - 1.0) < 1e-3);
  }
  SUBCASE("large amplitude decays monotonically without changing sign") {
    for (double x : {0.5, -0.9, 0.66}) {
      const auto tr = relax_homogeneous(state(sp, 1, 1, x), sp, in, {10 * tau, tau / 20});
      for (std::size_t i = 1; i < tr.size(); ++i) {
        CHECK(std::abs(tr[i].Pi) < std::abs(tr[i - 1].Pi));
        CHECK(tr[i].Pi * x > 0.0);
        CHECK(in_six_field_window(tr[i].Pi, 0.0));
      }
    }
  }
  CHECK_THROWS_AS(relax_homogeneous(state(sp, 1, 1, 0.1), sp, in, {-1.0, 0.1}), Error);
  CHECK_THROWS_AS(relax_homogeneous(state(sp, 1, 1, 0.7), sp, in, {1.0, 0.1}), Error);
}

TEST_CASE("six-field report bundles the closed forms") {
  const auto sp = SpeciesParams::dimensionless(0.5);
  const auto in = InteractionParams::constant_K(2.0, 1.0);
  const auto h = state(sp, 1, 1, 0.3);
  const auto r = six_field_report(h, sp, in);
  CHECK(r.P == production_P(h, sp, in).P);
  CHECK(r.Sigma == entropy_production_Sigma(h, sp, in));
  CHECK(r.K_noneq == K_noneq(h, sp));
  CHECK(r.tau_Pi > 0);
}
