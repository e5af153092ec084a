#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polygas/ensembles.hpp"
#include "polygas/errors.hpp"
#include "polygas/fourteen_moment.hpp"
#include "polygas/quadrature.hpp"
#include "polygas/six_field.hpp"
#include "polygas/special_fn.hpp"

using namespace polygas;

namespace {

SpeciesParams species(double alpha) {
  SpeciesParams sp = SpeciesParams::dimensionless(alpha);
  sp.m = 1.1;
  return sp;
}

HydroState base(const SpeciesParams& sp) {
  HydroState h = HydroState::from_pressure(1.3, 0.9, sp);
  h.U = {0.4, -0.2, 0.1};
  return h;
}

HydroState nonequilibrium(const SpeciesParams& sp) {
  HydroState h = base(sp);
  const double p = h.p(sp);
  h.Pi = 0.03 * p;
  h.p_dev(0, 0) = 0.02 * p;
  h.p_dev(1, 1) = -0.05 * p;
  h.p_dev(2, 2) = 0.03 * p;
  h.p_dev(0, 1) = h.p_dev(1, 0) = 0.01 * p;
  h.p_dev(1, 2) = h.p_dev(2, 1) = -0.015 * p;
  h.q = {0.02, -0.01, 0.03};
  return h;
}

double rel(double a, double b, double scale) { return std::abs(a - b) / scale; }

}  // namespace

TEST_CASE("quadrature rules integrate monomials") {
  const auto gh = gauss_hermite(40);
  double s0 = 0, s2 = 0, s6 = 0;
  for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
    s0 += gh.weights[i];
    s2 += gh.weights[i] * std::pow(gh.nodes[i], 2);
    s6 += gh.weights[i] * std::pow(gh.nodes[i], 6);
  }
  const double sp = std::sqrt(std::numbers::pi);
  CHECK(s0 == doctest::Approx(sp).epsilon(1e-13));
  CHECK(s2 == doctest::Approx(sp / 2).epsilon(1e-13));
  CHECK(s6 == doctest::Approx(15 * sp / 8).epsilon(1e-12));
  for (double a : {-0.5, 0.0, 0.5, 2.0, 12.5}) {
    const auto gl = gauss_laguerre(40, a);
    for (int k = 0; k <= 4; ++k) {
      double s = 0;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * std::pow(gl.nodes[i], k);
      CHECK(s == doctest::Approx(gamma_fn(a + k + 1)).epsilon(1e-11));
    }
  }
}

TEST_CASE("normalisation and constraints of the Maxwellian and six-field distributions") {
  for (double alpha : {-0.5, 0.0, 0.5, 2.0}) {
    const auto sp = species(alpha);
    const HydroState h0 = base(sp);
    const double p = h0.p(sp);
    Distribution fm({DistributionKind::Maxwellian, h0, sp});
    CHECK(moment(fm, {WeightKind::Mass}) == doctest::Approx(h0.rho).epsilon(1e-8));
    CHECK(moment(fm, {WeightKind::Energy}) == doctest::Approx((alpha + 2.5) * p).epsilon(1e-8));
    CHECK(moment(fm, {WeightKind::Momentum, 1}) == doctest::Approx(h0.rho * h0.U[1]).epsilon(1e-8));

    for (double x : {-0.6, -0.1, 0.2, 0.5}) {
      if (!in_six_field_window(x, alpha)) continue;
      HydroState h = h0;
      h.Pi = x * p;
      Distribution f6({DistributionKind::SixField, h, sp});
      CHECK(moment(f6, {WeightKind::Mass}) == doctest::Approx(h.rho).epsilon(1e-8));
      CHECK(moment(f6, {WeightKind::TwiceKinetic}) == doctest::Approx(3 * (p + h.Pi)).epsilon(1e-8));
      CHECK(moment(f6, {WeightKind::Energy}) == doctest::Approx((alpha + 2.5) * p).epsilon(1e-8));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const double want = i == j ? p + h.Pi : 0.0;
          CHECK(rel(moment(f6, {WeightKind::Stress, i, j}), want, p) < 1e-8);
        }
    }
  }
}

TEST_CASE("fourteen-moment distribution reproduces its fourteen constraints and closure fluxes") {
  for (double alpha : {0.0, 0.5, 2.0}) {
    const auto sp = species(alpha);
    const HydroState h = nonequilibrium(sp);
    const double p = h.p(sp);
    Distribution f({DistributionKind::FourteenLinearized, h, sp});
    CHECK(moment(f, {WeightKind::Mass}) == doctest::Approx(h.rho).epsilon(1e-8));
    for (int i = 0; i < 3; ++i) CHECK(moment(f, {WeightKind::Momentum, i}) == doctest::Approx(h.rho * h.U[i]).epsilon(1e-8));
    CHECK(moment(f, {WeightKind::Energy}) == doctest::Approx((alpha + 2.5) * p).epsilon(1e-8));
    CHECK(moment(f, {WeightKind::TwiceKinetic}) == doctest::Approx(3 * (p + h.Pi)).epsilon(1e-8));
    const auto fl = closure_fluxes_14(h, sp);
    const double qs = norm(h.q);
    for (int i = 0; i < 3; ++i) {
      CHECK(rel(moment(f, {WeightKind::EnergyFlux, i}), h.q[i], qs) < 1e-8);
      for (int j = 0; j < 3; ++j) {
        CHECK(rel(moment(f, {WeightKind::Stress, i, j}), h.p_dev(i, j) + (i == j) * (p + h.Pi), p) < 1e-8);
        CHECK(rel(moment(f, {WeightKind::EnergyStress, i, j}), fl.q_ij(i, j), p * p / h.rho) < 1e-8);
        for (int k = 0; k < 3; ++k) {
          CHECK(rel(moment(f, {WeightKind::Triple, i, j, k}), fl.p_ijk[i][j][k], qs) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("Monte Carlo moments agree with quadrature") {
  const auto sp = species(0.5);
  const HydroState h = nonequilibrium(sp);
  Distribution f({DistributionKind::FourteenLinearized, h, sp});
  for (auto w : {Weight{WeightKind::Energy}, Weight{WeightKind::Stress, 0, 1}, Weight{WeightKind::EnergyFlux, 2}}) {
    const auto e = moment(f, w, MCMethod{7, 400000, 2});
    CHECK(std::abs(e.value - moment(f, w)) <= 4.0 * e.std_error);
  }
}

TEST_CASE("unsupported weight") {
  const auto sp = species(0.0);
  Distribution f({DistributionKind::Maxwellian, base(sp), sp});
  CHECK_THROWS_AS(moment(f, {WeightKind::Custom}), Error);
  CHECK_THROWS_AS(moment(f, {WeightKind::Stress, 0, 3}), Error);
}

TEST_CASE("negativity diagnostic of the linearized distribution") {
  const auto sp = species(0.0);
  HydroState h = nonequilibrium(sp);
  CHECK(min_over_nodes(Distribution({DistributionKind::Maxwellian, h, sp})) > 0.0);
  h.q = {3.0, 0, 0};
  CHECK(min_over_nodes(Distribution({DistributionKind::FourteenLinearized, h, sp})) < 0.0);
}

TEST_CASE("entropy density: closed form, quadrature and the nonequilibrium entropy") {
  for (double alpha : {0.0, 0.5, 2.0}) {
    const auto sp = species(alpha);
    HydroState h = base(sp);
    const double p = h.p(sp);
    Distribution fm({DistributionKind::Maxwellian, h, sp});
    const auto hm = entropy_density(fm);
    CHECK(hm.h == doctest::Approx(entropy_density_numeric(fm)).epsilon(1e-6));
    for (int i = 0; i < 3; ++i) CHECK(hm.h_flux[i] == doctest::Approx(h.U[i] * hm.h));
    for (double x : {-0.5, -0.1, 0.1, 0.4}) {
      h.Pi = x * p;
      Distribution f6({DistributionKind::SixField, h, sp});
      const auto h6 = entropy_density(f6);
      CHECK(h6.h == doctest::Approx(entropy_density_numeric(f6)).epsilon(1e-6));
      CHECK(h6.h <= hm.h);
      CHECK(h6.h - hm.h == doctest::Approx(K_noneq(h, sp)).epsilon(1e-12).scale(0.0));
    }
    h.Pi = 0.0;
  }
}

TEST_CASE("rescaling between settings") {
  CHECK(rescale_weighted(2.0, 4.0, 0.5) == doctest::Approx(4.0));
  CHECK(rescale_weighted(1.7, 3.0, 0.0) == 1.7);
  for (double I : {0.1, 1.0, 7.3})
    for (double a : {-0.5, 0.5, 2.0}) {
      CHECK(rescale_weighted(rescale_nonweighted(0.37, I, a), I, a) == doctest::Approx(0.37).epsilon(1e-15));
    }
  CHECK_THROWS_AS(rescale_weighted(1.0, 0.0, -0.5), Error);
  CHECK_THROWS_AS(rescale_nonweighted(1.0, 0.0, 0.5), Error);
  CHECK_THROWS_AS(rescale_weighted(1.0, -1.0, 0.5), Error);
}

TEST_CASE("collision frequency closed form") {
  // c_hat = I_hat = 0: 1F1 = 1, the bracket collapses to Gamma combinations
  for (double a : {0.0, 0.5, 2.0})
    for (double g : {0.5, 1.0, 2.0}) {
      const double ga1 = gamma_fn(a + 1), gag = gamma_fn(a + g / 2 + 1), g3 = gamma_fn((g + 3) / 2);
      const double want = ga1 / gamma_fn((4 * a + g + 7) / 2) *
                          (ga1 * g3 * g3 * std::pow(2.0, g / 2 + 1) / std::sqrt(std::numbers::pi) +
                           0.5 * std::sqrt(std::numbers::pi) * gag * gag / ga1);
      CHECK(collision_frequency_hat(a, g, 0.0, 0.0) == doctest::Approx(want).epsilon(1e-13));
    }
  // dimensional and dimensionless forms agree
  SpeciesParams sp{"N2", 4.65e-26, 0.0, kBoltzmannSI, std::nullopt};
  const auto in = InteractionParams::constant_K(0.7, 3e-17);
  const HydroState h = HydroState::equilibrium(1.2, 300.0, {10, 0, 0});
  const double kT = sp.k * h.T;
  const MicroState s{{10 + 400, 250, 0}, 1.3 * kT};
  const double c_hat = std::sqrt(sp.m / kT) * std::hypot(400.0, 250.0);
  const double want = h.rho / sp.m * in.b.norm() * std::pow(kT / sp.m, 0.35) * collision_frequency_hat(0.0, 0.7, c_hat, 1.3);
  CHECK(collision_frequency(s, h, sp, in) == doctest::Approx(want).epsilon(1e-13));
  // alpha = 0 vs 1/2 are finite, positive and different
  const double n0 = collision_frequency_hat(0.0, 1.0, 1.0, 1.0), n5 = collision_frequency_hat(0.5, 1.0, 1.0, 1.0);
  CHECK(n0 > 0);
  CHECK(n5 > 0);
  CHECK(n0 != n5);
}

TEST_CASE("collision frequency grid is strictly increasing along both axes") {
  const auto cg = linspace(0.0, 5.0, 101);
  for (double a : {0.0, 0.5})
    for (double g : {0.5, 1.0, 2.0}) {
      const auto grid = collision_frequency_grid(a, g, cg, cg);
      for (std::size_t i = 0; i < cg.size(); ++i)
        for (std::size_t j = 0; j < cg.size(); ++j) {
          const double v = grid[i * cg.size() + j].nu_hat;
          if (i + 1 < cg.size()) CHECK(grid[(i + 1) * cg.size() + j].nu_hat > v);
          if (j + 1 < cg.size()) CHECK(grid[i * cg.size() + j + 1].nu_hat > v);
        }
    }
}

TEST_CASE("collision frequency becomes state independent as gamma -> 0") {
  const double g = 1e-9;
  // I_hat = 0 is excluded: 0^(gamma/2) stays 0 for every gamma > 0
  const double ref = collision_frequency_hat(0.0, g, 0.0, 1.0);
  for (double c : {0.0, 0.5, 2.0, 4.0})
    for (double I : {0.3, 3.0}) CHECK(collision_frequency_hat(0.0, g, c, I) == doctest::Approx(ref).epsilon(1e-7));
}
