#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "polygas/errors.hpp"
#include "polygas/microdynamics.hpp"

using namespace polygas;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

struct StateGen {
  std::mt19937_64 rng{12345};
  std::normal_distribution<double> n01{0.0, 1.0};
  std::uniform_real_distribution<double> u01{0.0, 1.0};

  Vec3 unit() {
    Vec3 v{n01(rng), n01(rng), n01(rng)};
    return (1.0 / norm(v)) * v;
  }
  CollisionState operator()(double lo = 0.02, double hi = 0.98) {
    CollisionState s;
    s.a.v = {n01(rng), n01(rng), n01(rng)};
    s.b.v = {n01(rng), n01(rng), n01(rng)};
    s.a.I = 2.0 * u01(rng);
    s.b.I = 2.0 * u01(rng);
    s.angles.r = lo + (hi - lo) * u01(rng);
    s.angles.R = lo + (hi - lo) * u01(rng);
    s.angles.sigma = unit();
    return s;
  }
};

}  // namespace

TEST_CASE("total_energy examples") {
  const auto sp = SpeciesParams::dimensionless(0.0);
  CollisionState s;
  s.a.v = {1, 0, 0};
  s.b.v = {-1, 0, 0};
  CHECK(total_energy(s, sp) == doctest::Approx(1.0));
  s.a.v = s.b.v = {0.3, -2, 1};
  s.a.I = 2;
  s.b.I = 3;
  auto sp2 = sp;
  sp2.m = 7.5;
  CHECK(total_energy(s, sp2) == doctest::Approx(5.0));
}

TEST_CASE("total energy is the lab energy minus the centre-of-mass part") {
  StateGen gen;
  auto sp = SpeciesParams::dimensionless(0.5);
  sp.m = 2.3;
  for (int i = 0; i < 100; ++i) {
    const auto s = gen();
    const Vec3 V = 0.5 * (s.a.v + s.b.v);
    CHECK(total_energy(s, sp) == doctest::Approx(lab_energy(s, sp) - sp.m * norm2(V)).epsilon(1e-12));
  }
}

TEST_CASE("collide head-on with R = 1") {
  const auto sp = SpeciesParams::dimensionless(0.0);
  CollisionState s;
  s.a.v = {1, 0, 0};
  s.b.v = {-1, 0, 0};
  s.angles = {0.5, 1.0, {0, 1, 0}};
  const auto p = collide(s, sp);
  CHECK(p.a.v.x == doctest::Approx(0.0));
  CHECK(p.a.v.y == doctest::Approx(1.0));
  CHECK(p.b.v.y == doctest::Approx(-1.0));
  CHECK(p.a.I == 0.0);
  CHECK(p.b.I == 0.0);
  CHECK(p.angles.r == 0.5);  // convention when I + I_* = 0
}

TEST_CASE("collide conserves momentum and energy") {
  const auto sp = SpeciesParams::dimensionless(0.0);
  CollisionState s;
  s.a = {{2, 1, 0}, 0.3};
  s.b = {{0, 1, 0}, 0.7};
  s.angles = {0.25, 0.5, {0, 0, 1}};
  const auto p = collide(s, sp);
  const Vec3 P0 = s.a.v + s.b.v, P1 = p.a.v + p.b.v;
  for (int i = 0; i < 3; ++i) CHECK(P1[i] == doctest::Approx(P0[i]).epsilon(1e-14));
  CHECK(lab_energy(p, sp) == doctest::Approx(lab_energy(s, sp)).epsilon(1e-14));
}

TEST_CASE("collide errors on degenerate input") {
  const auto sp = SpeciesParams::dimensionless(0.0);
  CollisionState s;
  s.a.v = s.b.v = {1, 2, 3};
  try {
    collide(s, sp);
    FAIL("expected DegenerateCollision");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateCollision);
  }
  s.a.I = 1.0;
  try {
    collide(s, sp);
    FAIL("expected DegenerateDirection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateDirection);
  }
}

TEST_CASE("random states: conservation, involution, Jacobian, invariant product, reversibility") {
  StateGen gen;
  auto sp = SpeciesParams::dimensionless(0.5);
  sp.m = 1.7;
  const auto in = InteractionParams::constant_K(1.3, 0.8);
  for (int i = 0; i < 20000; ++i) {
    const auto s = gen(0.0, 1.0);
    if (s.angles.R <= 0.0 || s.angles.R >= 1.0) continue;
    const auto p = collide(s, sp);
    const Vec3 P0 = s.a.v + s.b.v, P1 = p.a.v + p.b.v;
    for (int k = 0; k < 3; ++k) CHECK(std::abs(P1[k] - P0[k]) <= 1e-13 * std::max(1.0, norm(P0)));
    CHECK(rel(lab_energy(p, sp), lab_energy(s, sp)) < 1e-12);

    const auto back = collide(p, sp);
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(back.a.v[k] - s.a.v[k]) <= 1e-10 * std::max(1.0, std::abs(s.a.v[k])));
      CHECK(std::abs(back.b.v[k] - s.b.v[k]) <= 1e-10 * std::max(1.0, std::abs(s.b.v[k])));
      CHECK(std::abs(back.angles.sigma[k] - s.angles.sigma[k]) <= 1e-10);
    }
    CHECK(rel(back.a.I, s.a.I) < 1e-10);
    CHECK(rel(back.b.I, s.b.I) < 1e-10);
    CHECK(rel(back.angles.r, s.angles.r) < 1e-10);
    CHECK(rel(back.angles.R, s.angles.R) < 1e-10);

    CHECK(rel(jacobian(s, sp) * jacobian(p, sp), 1.0) < 1e-10);
    CHECK(rel(jacobian(s, sp), jacobian_speed_form(s, sp)) < 1e-12);
    CHECK(rel(invariant_product(s), invariant_product(p)) < 1e-10);
    CHECK(rel(cross_section_model3(s, sp, in), cross_section_model3(p, sp, in)) < 1e-10);
    // dA-invariance: measure(s) = measure(T s) * J
    CHECK(rel(measure_weight(s, sp, in), measure_weight(p, sp, in) * jacobian(s, sp)) < 1e-10);
    CHECK(rel(measure_weight(s, sp, in), measure_weight(exchange(s), sp, in)) < 1e-12);
    CHECK(cross_section_model3(s, sp, in) >= 0.0);
    CHECK(measure_weight(s, sp, in) >= 0.0);
  }
}

TEST_CASE("jacobian equals the finite-difference determinant of the full map") {
  StateGen gen;
  const auto sp = SpeciesParams::dimensionless(0.0);
  for (int i = 0; i < 50; ++i) {
    const auto s = gen(0.1, 0.9);
    CHECK(oracle::fd_jacobian(s, sp) == doctest::Approx(jacobian(s, sp)).epsilon(1e-5));
  }
}

TEST_CASE("jacobian is one when R' = R") {
  const auto sp = SpeciesParams::dimensionless(0.0);
  CollisionState s;
  s.a.v = {1, 0, 0};
  s.b.v = {-1, 0, 0};
  s.a.I = 0.5;
  s.b.I = 0.5;  // E = 2, R' = 1/2
  s.angles = {0.3, 0.5, {0, 0, 1}};
  CHECK(jacobian(s, sp) == doctest::Approx(1.0).epsilon(1e-15));
  s.angles.R = 1.0;
  s.angles.R = 0.5;
  s.a.I = s.b.I = 0.0;  // R' = 1
  CHECK_THROWS_AS(jacobian(s, sp), Error);
}

TEST_CASE("invariant product vanishes at the edges") {
  CollisionState s;
  s.a.I = 0.0;
  s.b.I = 2.0;
  CHECK(invariant_product(s) == 0.0);
  s.a.I = 1.0;
  s.angles.r = 1.0;
  CHECK(invariant_product(s) == 0.0);
  s.angles.r = 0.0;
  CHECK(invariant_product(s) == 0.0);
}

TEST_CASE("cross section examples") {
  const auto sp = SpeciesParams::dimensionless(0.0);
  CollisionState s;
  s.a.v = {2, 0, 0};
  s.angles.R = 1.0;
  CHECK(cross_section_model3(s, sp, InteractionParams::constant_K(2.0, 1.0)) == doctest::Approx(4.0));
  s.a.v = {0, 0, 0};
  s.angles.R = 0.4;
  CHECK(cross_section_model3(s, sp, InteractionParams::constant_K(1.0, 1.0)) == 0.0);
  s.a.v = {1, 2, 0};
  s.b.v = {0, -1, 3};
  s.a.I = 0.6;
  s.b.I = 1.4;
  s.angles = {0.3, 0.7, {0, 0, 1}};
  const auto in = InteractionParams::constant_K(1.5, 1.0);
  CHECK(measure_weight(s, sp, in) ==
        doctest::Approx(cross_section_model3(s, sp, in) * 0.3 * std::sqrt(0.7)).epsilon(1e-14));
}

TEST_CASE("tabulated kernel") {
  const auto sp = SpeciesParams::dimensionless(0.0);
  const auto flat = AngularKernel::tabulated({2.0, 2.0, 2.0});
  CHECK(flat.norm() == doctest::Approx(8.0 * std::numbers::pi));
  CHECK(AngularKernel::constant(2.0).norm() == doctest::Approx(8.0 * std::numbers::pi));
  const auto lin = AngularKernel::tabulated({0.0, 1.0, 2.0});  // b(mu) = 1 + mu
  CHECK(lin(0.5) == doctest::Approx(1.5));
  CHECK(lin.norm() == doctest::Approx(4.0 * std::numbers::pi));
  InteractionParams in{1.0, lin};
  CollisionState s;
  s.a.v = {1, 0, 0};
  s.angles = {0.5, 1.0, {1, 0, 0}};  // u.sigma / |u| = 1
  CHECK(cross_section_model3(s, sp, in) == doctest::Approx(2.0));
  CHECK_THROWS_AS(AngularKernel::tabulated({1.0}), Error);
  CHECK_THROWS_AS(AngularKernel::tabulated({1.0, -1.0, 1.0}), Error);
}

TEST_CASE("species validation") {
  CHECK_THROWS_AS(SpeciesParams::dimensionless(-1.0).validate(), Error);
  SpeciesParams sp = SpeciesParams::from_dof("CO2-like", 7.3e-26, 9.0);
  CHECK(sp.alpha == doctest::Approx(2.0));
  sp.validate();
  sp.D = 7.0;
  CHECK_THROWS_AS(sp.validate(), Error);
  sp.D.reset();
  sp.m = 0.0;
  CHECK_THROWS_AS(sp.validate(), Error);
  CHECK_THROWS_AS(InteractionParams::constant_K(0.0, 1.0).validate(), Error);
}
