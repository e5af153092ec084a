// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <fmt/core.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polygas/config.hpp"
#include "polygas/ensembles.hpp"
#include "polygas/errors.hpp"
#include "polygas/fourteen_moment.hpp"
#include "polygas/mc_oracle.hpp"
#include "polygas/microdynamics.hpp"
#include "polygas/six_field.hpp"
#include "polygas/tables.hpp"

using namespace polygas;

namespace {

// pinned tolerances
constexpr double kGammaStarTol = 1e-3;
constexpr double kPrRootTol = 5e-4;
constexpr double kGammaStarManyTol = 0.05;
constexpr double kTableTol = 1e-3;
constexpr double kRelErrPP = 0.1;
constexpr double kSigmas = 3.0;
constexpr double kMaxRelSE = 0.01;
constexpr std::uint64_t kNLarge = 10'000'000;
constexpr std::uint64_t kNMedium = 1'000'000;
constexpr double kSigmaIdentityRel = 1e-12;
constexpr double kKpdeTol = 1e-6;
constexpr double kConservationRel = 1e-12;
constexpr double kInvolutionRel = 1e-10;
constexpr double kJacobianRel = 1e-10;
constexpr double kFdJacobianRel = 1e-5;
constexpr double kSettingRel = 1e-12;
constexpr double kRelaxRel = 1e-3;
constexpr double kDeltaBound = 0.12;
constexpr unsigned kWorkers = 4;

struct Outcome {
  bool pass;
  std::string detail;
};

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

std::vector<Table> load_tables() {
  const auto dir = std::filesystem::path(default_data_dir());
  TableTolerances tol;
  tol.gamma_star = kGammaStarTol;
  tol.pr_root = kPrRootTol;
  tol.gamma_star_many = kGammaStarManyTol;
  tol.gamma = kTableTol;
  tol.pr = kTableTol;
  tol.rel_error_pp = kRelErrPP;
  return reproduce_tables(Config::load((dir / "gases.cfg").string()), tol);
}

Outcome table_outcome(const Table& t) {
  int n = 0, bad = 0;
  std::string fails;
  for (const auto& r : t.rows)
    for (const auto& c : r.cells) {
      if (!c.reference) continue;
      ++n;
      if (c.pass) continue;
      ++bad;
      fails += fmt::format(" {}.{}={:.4f}(ref {:.4f})", r.label, c.column, c.computed, *c.reference);
    }
  return {bad == 0, fmt::format("{}/{} cells within tolerance{}", n - bad, n, bad ? ";" + fails : "")};
}

Outcome c1() {
  const double g0 = solve_gamma_star(0.0), g5 = solve_gamma_star(0.5);
  const double p0 = prandtl_model(0.0, g0), p5 = prandtl_model(0.5, g5);
  const bool ok = std::abs(g0 - 2.153) <= kGammaStarTol && std::abs(g5 - 2.368) <= kGammaStarTol &&
                  std::abs(p0 - 14.0 / 19.0) <= kPrRootTol && std::abs(p5 - 16.0 / 21.0) <= kPrRootTol;
  return {ok, fmt::format("gamma*(0)={:.5f} gamma*(0.5)={:.5f} Pr={:.6f},{:.6f}", g0, g5, p0, p5)};
}

Outcome c2() {
  const double ref[] = {4.063, 9.469, 17.262, 25.801, 34.705, 43.835, 53.123, 62.526};
  double worst = 0;
  for (int N = 3; N <= 10; ++N) {
    const double a = (3.0 * N - 5.0) / 2.0;
    worst = std::max(worst, std::abs(solve_gamma_star(a) - ref[N - 3]));
  }
  return {worst <= kGammaStarManyTol, fmt::format("max |gamma* - ref| = {:.4f}", worst)};
}

Outcome c3() {
  for (const auto& t : load_tables())
    if (t.name == "table3") return table_outcome(t);
  return {false, "table3 missing"};
}

Outcome c4() {
  for (const auto& t : load_tables())
    if (t.name == "table4") return table_outcome(t);
  return {false, "table4 missing"};
}

Outcome c5() {
  bool ok = true;
  double worst_sig = 0, worst_se = 0;
  std::uint64_t seed = 500;
  for (double a : {0.0, 0.5})
    for (double g : {1.0, 2.0})
      for (double x : {-0.5, 0.1, 0.3}) {
        const auto sp = SpeciesParams::dimensionless(a);
        const auto in = InteractionParams::constant_K(g, 1.0);
        const auto h = HydroState::from_pressure(1.0, 1.0, sp, x);
        const double closed = production_P(h, sp, in).P;
        const auto e = oracle_production6(h, sp, in, {kNLarge, seed++, kWorkers});
        const double rse = e.std_error / std::abs(e.value);
        ok = ok && agrees(closed, e, kSigmas) && rse <= kMaxRelSE;
        worst_sig = std::max(worst_sig, sigma_distance(closed, e));
        worst_se = std::max(worst_se, rse);
      }
  return {ok, fmt::format("12 configs, max {:.2f} sigma, max rel. SE {:.2e}", worst_sig, worst_se)};
}

Outcome c6() {
  bool ok = true;
  double worst = 0;
  std::uint64_t seed = 600;
  for (double a : {0.0, 0.5})
    for (double g : {1.0, 2.0}) {
      const auto sp = SpeciesParams::dimensionless(a);
      const auto in = InteractionParams::constant_K(g, 1.0);
      const auto h = HydroState::equilibrium(1.0, 1.0);
      const auto c = production_coeffs_14(h, sp, in);
      const auto e = oracle_production14(h, sp, in, {kNLarge, seed++, kWorkers});
      for (auto [closed, est] : {std::pair{c.P_dev_coeff, e.dev_coeff}, std::pair{3.0 * c.P_Pi_coeff, e.trace_coeff},
                                 std::pair{c.Q_q_coeff, e.q_coeff}}) {
        ok = ok && agrees(closed, est, kSigmas);
        worst = std::max(worst, sigma_distance(closed, est));
      }
    }
  return {ok, fmt::format("4 configs x 3 coefficients, max {:.2f} sigma", worst)};
}

Outcome c7() {
  const auto sp = SpeciesParams::dimensionless(0.0);
  const auto in = InteractionParams::constant_K(1.0, 1.0);
  const auto h = HydroState::equilibrium(1.0, 1.0);
  bool ok = true;
  double worst = 0;
  std::uint64_t seed = 700;
  for (auto [c, I] : {std::pair{0.0, 0.0}, std::pair{1.0, 1.0}, std::pair{3.0, 0.5}}) {
    const MicroState st{{c, 0.0, 0.0}, I};
    const auto e = oracle_collision_freq(st, h, sp, in, {kNMedium, seed++, kWorkers});
    const double closed = collision_frequency(st, h, sp, in);
    ok = ok && agrees(closed, e, kSigmas);
    worst = std::max(worst, sigma_distance(closed, e));
  }
  return {ok, fmt::format("3 points, max {:.2f} sigma", worst)};
}

Outcome c8() {
  std::mt19937_64 rng(800);
  bool ok = true;
  double worst = 0, minS = INFINITY;
  for (double a : {0.0, 0.5, 1.0, 2.0})
    for (double g : {0.5, 1.0, 2.0}) {
      const auto sp = SpeciesParams::dimensionless(a);
      const auto in = InteractionParams::constant_K(g, 1.0);
      std::uniform_real_distribution<double> U(-1.0 + 1e-6, 2.0 * (a + 1.0) / 3.0 - 1e-6);
      for (int i = 0; i < 1000; ++i) {
        const auto h = HydroState::from_pressure(1.0, 1.0, sp, U(rng));
        const double S = entropy_production_Sigma(h, sp, in);
        const double alt = dK_dPi(h, sp) * production_P(h, sp, in).P / 3.0;
        const double d = S == alt ? 0.0 : rel(S, alt);
        ok = ok && S >= 0.0 && d <= kSigmaIdentityRel;
        worst = std::max(worst, d);
        minS = std::min(minS, S);
      }
    }
  return {ok, fmt::format("12000 states, min Sigma {:.3e}, max identity rel. diff {:.2e}", minS, worst)};
}

Outcome c9() {
  const auto sp = SpeciesParams::dimensionless(0.5);
  bool ok = true;
  double worst = 0;
  int n = 0;
  for (double rho : {0.1, 0.5, 1.0, 2.0, 10.0})
    for (double p : {0.2, 1.0, 3.0, 7.0})
      for (double x : {-0.9, -0.4, 0.0, 0.3, 0.9}) {
        const auto h = HydroState::from_pressure(rho, p, sp, x * p);
        const double r = std::abs(K_pde_residual(h, sp)) / (sp.k * rho / sp.m);
        ok = ok && r < kKpdeTol;
        worst = std::max(worst, r);
        ++n;
      }
  return {ok, fmt::format("{} grid points, max residual {:.2e} k rho/m", n, worst)};
}

Outcome c10() {
  std::mt19937_64 rng(1000);
  std::normal_distribution<double> N(0.0, 1.0);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  auto unit = [&] {
    Vec3 v{N(rng), N(rng), N(rng)};
    return (1.0 / norm(v)) * v;
  };
  auto gen = [&](double lo, double hi) {
    CollisionState s;
    s.a = {{N(rng), N(rng), N(rng)}, 2.0 * U(rng)};
    s.b = {{N(rng), N(rng), N(rng)}, 2.0 * U(rng)};
    s.angles = {lo + (hi - lo) * U(rng), lo + (hi - lo) * U(rng), unit()};
    return s;
  };
  double w_cons = 0, w_inv = 0, w_jac = 0, w_lem = 0, w_fd = 0;
  int n = 0;
  for (double a : {0.0, 0.5, 2.0}) {
    auto sp = SpeciesParams::dimensionless(a);
    sp.m = 1.7;
    const auto in = InteractionParams::constant_K(1.3, 0.8);
    const int count = a == 0.0 ? 33334 : 33333;
    for (int i = 0; i < count; ++i, ++n) {
      auto s = gen(0.0, 1.0);
      if (s.angles.R == 0.0) s.angles.R = 0.5;
      const auto p = collide(s, sp);
      const Vec3 P0 = s.a.v + s.b.v, P1 = p.a.v + p.b.v;
      for (int k = 0; k < 3; ++k) w_cons = std::max(w_cons, std::abs(P1[k] - P0[k]) / std::max(1.0, norm(P0)));
      w_cons = std::max(w_cons, rel(lab_energy(p, sp), lab_energy(s, sp)));
      const auto b = collide(p, sp);
      for (int k = 0; k < 3; ++k) {
        w_inv = std::max(w_inv, std::abs(b.a.v[k] - s.a.v[k]) / std::max(1.0, std::abs(s.a.v[k])));
        w_inv = std::max(w_inv, std::abs(b.b.v[k] - s.b.v[k]) / std::max(1.0, std::abs(s.b.v[k])));
        w_inv = std::max(w_inv, std::abs(b.angles.sigma[k] - s.angles.sigma[k]));
      }
      for (auto [x, y] : {std::pair{b.a.I, s.a.I}, std::pair{b.b.I, s.b.I}, std::pair{b.angles.r, s.angles.r},
                          std::pair{b.angles.R, s.angles.R}})
        w_inv = std::max(w_inv, rel(x, y));
      w_jac = std::max(w_jac, rel(jacobian(s, sp) * jacobian(p, sp), 1.0));
      w_jac = std::max(w_jac, rel(jacobian(s, sp), jacobian_speed_form(s, sp)));
      w_lem = std::max(w_lem, rel(invariant_product(s), invariant_product(p)));
      w_lem = std::max(w_lem, rel(measure_weight(s, sp, in), measure_weight(p, sp, in) * jacobian(s, sp)));
    }
  }
  for (int i = 0; i < 100; ++i) {
    const auto sp = SpeciesParams::dimensionless(i % 2 ? 0.5 : 0.0);
    const auto s = gen(0.1, 0.9);
    w_fd = std::max(w_fd, rel(oracle::fd_jacobian(s, sp), jacobian(s, sp)));
  }
  const bool ok = w_cons <= kConservationRel && w_inv <= kInvolutionRel && w_jac <= kJacobianRel &&
                  w_lem <= kJacobianRel && w_fd <= kFdJacobianRel;
  return {ok, fmt::format("{} states: conservation {:.1e}, involution {:.1e}, jacobian {:.1e}, invariance {:.1e}; "
                          "100 FD determinants {:.1e}",
                          n, w_cons, w_inv, w_jac, w_lem, w_fd)};
}

DistributionSpec six(double alpha, double x) {
  const auto sp = SpeciesParams::dimensionless(alpha);
  return {DistributionKind::SixField, HydroState::from_pressure(1.0, 1.0, sp, x), sp};
}

DistributionSpec fourteen(double alpha) {
  const auto sp = SpeciesParams::dimensionless(alpha);
  HydroState h = HydroState::equilibrium(1.0, 1.0, {0.3, -0.1, 0.2});
  h.Pi = 0.05;
  h.p_dev(0, 1) = h.p_dev(1, 0) = 0.04;
  h.p_dev(0, 0) = 0.03;
  h.p_dev(2, 2) = -0.03;
  h.q = {0.05, 0.02, -0.03};
  return {DistributionKind::FourteenLinearized, h, sp};
}

Outcome c11() {
  const auto in = InteractionParams::constant_K(1.0, 1.0);
  bool ok = true;
  double worst = 0;
  std::uint64_t seed = 1100;
  for (const auto& f : {six(0.0, 0.3), fourteen(0.5)})
    for (TestFunction chi : {TestFunction{TestFunctionKind::Mass}, TestFunction{TestFunctionKind::Momentum, 0},
                             TestFunction{TestFunctionKind::Momentum, 1}, TestFunction{TestFunctionKind::Momentum, 2},
                             TestFunction{TestFunctionKind::Energy}}) {
      const auto e = mc_weak_form({Setting::NonWeighted, chi, f, in}, {kNMedium, seed++, kWorkers});
      ok = ok && agrees(0.0, e, kSigmas);
      worst = std::max(worst, sigma_distance(0.0, e));
    }
  return {ok, fmt::format("2 distributions x 5 invariants, max {:.2f} sigma", worst)};
}

Outcome c12() {
  const auto in = InteractionParams::constant_K(1.0, 1.0);
  bool ok = true;
  double worst = 0;
  for (double a : {0.5, 1.0}) {
    const auto r = equivalence_check(six(a, 0.3), in, {TestFunctionKind::Stress, 0, 0}, {kNMedium, 1200, kWorkers});
    const double d = rel(r.weighted.value, r.nonweighted.value);
    ok = ok && d <= kSettingRel;
    worst = std::max(worst, d);
  }
  return {ok, fmt::format("max rel. difference {:.2e}", worst)};
}

Outcome c13() {
  const auto in = InteractionParams::constant_K(1.0, 1.0);
  const auto f = six(0.0, 0.3);
  const auto D = entropy_sign_check(f, in, {kNMedium, 1300, kWorkers});
  const double upper = D.value + kSigmas * D.std_error;
  const double Sigma = entropy_production_Sigma(f.hydro, f.species, in);
  const auto mk = scaled(D, -f.species.k);
  const auto sp = SpeciesParams::dimensionless(0.0);
  const auto D0 =
      entropy_sign_check({DistributionKind::Maxwellian, HydroState::equilibrium(1, 1), sp}, in, {kNMedium, 1301, kWorkers});
  const bool ok = upper < 0.0 && agrees(Sigma, mk, kSigmas) && agrees(0.0, D0, kSigmas);
  return {ok, fmt::format("D upper bound {:.3e}, -kD vs Sigma {:.2f} sigma, D(f_M) {:.2f} sigma", upper,
                          sigma_distance(Sigma, mk), sigma_distance(0.0, D0))};
}

Outcome c14() {
  const auto sp = SpeciesParams::dimensionless(0.0);
  const auto in = InteractionParams::constant_K(1.0, 1.0);
  const auto eq = HydroState::from_pressure(1, 1, sp, 0.0);
  // Pi decays on the trace relaxation time (three times the six-field linear rate constant)
  const double td = relaxation_times(eq, sp, in).tau_Pi;
  const double Pi0 = 1e-4;
  double worst = 0;
  for (const auto& s : relax_homogeneous(HydroState::from_pressure(1, 1, sp, Pi0), sp, in, {5 * td, td / 100}))
    worst = std::max(worst, std::abs(s.Pi / (Pi0 * std::exp(-s.t / td)) - 1.0));
  bool large_ok = true;
  for (double x : {0.5, -0.9, 0.66}) {
    const auto tr = relax_homogeneous(HydroState::from_pressure(1, 1, sp, x), sp, in, {10 * td, td / 20});
    for (std::size_t i = 1; i < tr.size(); ++i)
      large_ok = large_ok && std::abs(tr[i].Pi) < std::abs(tr[i - 1].Pi) && tr[i].Pi * x > 0.0 &&
                 in_six_field_window(tr[i].Pi, 0.0);
  }
  return {worst < kRelaxRel && large_ok,
          fmt::format("small amplitude max rel. deviation {:.2e}; large amplitude {}", worst,
                      large_ok ? "monotone, sign-preserving, in window" : "violated")};
}

Outcome c15() {
  const auto cg = linspace(0.0, 5.0, 101);
  int violations = 0;
  for (double a : {0.0, 0.5})
    for (double g : {0.5, 1.0, 2.0}) {
      const auto grid = collision_frequency_grid(a, g, cg, cg);
      const std::size_t n = cg.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const double v = grid[i * n + j].nu_hat;
          if (i + 1 < n && !(grid[(i + 1) * n + j].nu_hat > v)) ++violations;
          if (j + 1 < n && !(grid[i * n + j + 1].nu_hat > v)) ++violations;
        }
    }
  return {violations == 0, fmt::format("6 grids of 101x101, {} monotonicity violations", violations)};
}

Outcome c16() {
  double worst = 0, at_g = 0, at_a = 0;
  for (double a : {0.0, 0.5, 2.0, 5.0})
    for (int i = 1; i < 400; ++i) {
      const double g = 2.0 * i / 400.0;
      const double d = std::abs(delta_Pr(g, a));
      if (d > worst) worst = d, at_g = g, at_a = a;
    }
  return {worst < kDeltaBound, fmt::format("max |Delta| = {:.4f} at gamma={:.3f}, alpha={}", worst, at_g, at_a)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table1 gamma* and Pr at the root", c1},
      {"table2 gamma* for N = 3..10", c2},
      {"table3 gamma, Pr, relative errors", c3},
      {"table4 gamma, Pr, relative errors", c4},
      {"six-field production vs MC (n=1e7)", c5},
      {"fourteen-moment coefficients vs MC (n=1e7)", c6},
      {"collision frequency vs 9-D MC (n=1e6)", c7},
      {"residual inequality and Sigma identity", c8},
      {"K PDE residual", c9},
      {"microdynamics properties and FD Jacobian", c10},
      {"weak-form annihilation of invariants (n=1e6)", c11},
      {"weighted vs non-weighted setting", c12},
      {"entropy production sign (n=1e6)", c13},
      {"space-homogeneous relaxation", c14},
      {"collision frequency monotone on grid", c15},
      {"|Delta(gamma, alpha)| bound on (0, 2)", c16},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    fmt::print("{} {:2d} {}: {} [{:.1f} s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail, sec);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
