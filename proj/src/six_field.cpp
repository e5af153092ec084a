#include "polygas/six_field.hpp"

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "polygas/errors.hpp"
#include "polygas/special_fn.hpp"

namespace polygas {
namespace {

double upper_window(double alpha) { return 2.0 / 3.0 * (alpha + 1.0); }

double ratio(const HydroState& h, const SpeciesParams& sp) {
  require_six_field_window_guarded(h, sp);
  return h.Pi / h.p(sp);
}

// 1 - 3x / (2(alpha + 1))
double internal_factor(double x, double alpha) { return 1.0 - 1.5 * x / (alpha + 1.0); }

double K_of(double rho, double p, double Pi, const SpeciesParams& sp) {
  const double x = Pi / p;
  return sp.k * rho / sp.m *
         (1.5 * std::log1p(x) + (sp.alpha + 1.0) * std::log(internal_factor(x, sp.alpha)));
}

}  // namespace

void require_six_field_window_guarded(const HydroState& h, const SpeciesParams& sp) {
  const double x = h.Pi / h.p(sp);
  if (!(x > -1.0 + kSixFieldGuard && x < upper_window(sp.alpha) - kSixFieldGuard)) {
    std::ostringstream os;
    os << "Pi/p = " << x << " outside the six-field window (-1, " << upper_window(sp.alpha) << ")";
    fail(ErrorCode::OutOfValidityWindow, os.str());
  }
}

KConstants k_constants(double alpha, double gamma) {
  const double a = alpha, g = gamma;
  const double k1 = std::pow(2.0, 0.5 * (g + 3.0)) * gamma_fn(a + 2.0) * gamma_fn(a + 1.0) *
                    gamma_fn(0.5 * (g + 3.0)) * gamma_fn(0.5 * (g + 5.0));
  const double gg = gamma_fn(a + 0.5 * g + 1.0);
  const double k2 = 0.75 * std::numbers::sqrt2 * std::numbers::pi * (2.0 * a + 0.5 * g + 2.0) * gg * gg;
  return {k1, k2};
}

double C_P(double x, double alpha, double gamma) {
  const auto k = k_constants(alpha, gamma);
  const double a = alpha, g = gamma;
  return std::sqrt(2.0 / std::numbers::pi) * (a + 2.5) / (a + 1.0) / gamma_fn(0.5 * (4.0 * a + g + 9.0)) *
         (k.k1 * std::pow(2.0 * (1.0 + x), 0.5 * g) + k.k2 * std::pow(internal_factor(x, a), 0.5 * g));
}

ProductionSix production_P(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in) {
  const double x = ratio(h, sp);
  const double p = h.p(sp);
  const double cp = C_P(x, sp.alpha, in.gamma);
  const double P = -cp * h.rho * h.rho / sp.m * std::pow(p / h.rho, 0.5 * in.gamma + 1.0) * in.b.norm() * x;
  return {P, cp};
}

double entropy_production_Sigma(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in) {
  const double x = ratio(h, sp);
  const double p = h.p(sp);
  const double a = sp.alpha;
  const double P = production_P(h, sp, in).P;
  return -sp.k * h.rho / (2.0 * sp.m * p) / internal_factor(x, a) / (1.0 + x) * (a + 2.5) / (a + 1.0) * x * P;
}

double K_noneq(const HydroState& h, const SpeciesParams& sp) {
  ratio(h, sp);
  return K_of(h.rho, h.p(sp), h.Pi, sp);
}

double dK_dPi(const HydroState& h, const SpeciesParams& sp) {
  const double x = ratio(h, sp);
  const double p = h.p(sp);
  const double a = sp.alpha;
  return -1.5 * sp.k * h.rho / (sp.m * p) * (a + 2.5) / (a + 1.0) / internal_factor(x, a) / (1.0 + x) * x;
}

double K_pde_residual(const HydroState& h, const SpeciesParams& sp) {
  ratio(h, sp);
  const double rho = h.rho, p = h.p(sp), Pi = h.Pi, a = sp.alpha;
  const double T = p * sp.m / (rho * sp.k);
  const double hr = 1e-5 * rho, hp = 1e-6 * p;
  const double dK_drho = (K_of(rho + hr, p, Pi, sp) - K_of(rho - hr, p, Pi, sp)) / (2.0 * hr);
  const double dK_dp = (K_of(rho, p + hp, Pi, sp) - K_of(rho, p - hp, Pi, sp)) / (2.0 * hp);
  const double K = K_of(rho, p, Pi, sp);
  return rho * dK_drho + ((p + Pi) / (a + 2.5) + p) * dK_dp +
         ((p + Pi) * (5.0 / 3.0 - 1.0 / (a + 2.5)) - p) * dK_dPi(h, sp) - K + Pi / T;
}

double tau_Pi_six(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in) {
  const auto k = k_constants(sp.alpha, in.gamma);
  const double a = sp.alpha, g = in.gamma, p = h.p(sp);
  const double rate = h.rho / sp.m * std::pow(p / h.rho, 0.5 * g) * in.b.norm() * (a + 2.5) / (a + 1.0) *
                      std::sqrt(2.0 / std::numbers::pi) / gamma_fn(0.5 * (4.0 * a + g + 9.0)) *
                      (std::pow(2.0, 0.5 * g) * k.k1 + k.k2);
  return 1.0 / rate;
}

SixFieldReport six_field_report(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in) {
  const auto P = production_P(h, sp, in);
  return {P.P, P.C_P, entropy_production_Sigma(h, sp, in), K_noneq(h, sp), dK_dPi(h, sp), tau_Pi_six(h, sp, in)};
}

std::vector<RelaxSample> relax_homogeneous(const HydroState& initial, const SpeciesParams& sp,
                                           const InteractionParams& in, const RelaxOptions& opt) {
  namespace ode = boost::numeric::odeint;
  using State = std::array<double, 1>;
  require_six_field_window_guarded(initial, sp);
  if (!(opt.t_end > 0.0) || !(opt.dt_out > 0.0)) fail(ErrorCode::Domain, "relax: t_end and dt_out must be > 0");

  const double p = initial.p(sp);
  const double rho = initial.rho;
  HydroState work = initial;
  auto rhs = [&](const State& y, State& dy, double) {
    work.Pi = y[0];
    try {
      dy[0] = production_P(work, sp, in).P / 3.0;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::OutOfValidityWindow) throw;
      // trial stages outside the window: report and let the step controller reject
      dy[0] = std::nan("");
    }
  };

  auto stepper = ode::make_dense_output(opt.atol_rel * p, opt.rtol, ode::runge_kutta_dopri5<State>());
  stepper.initialize(State{initial.Pi}, 0.0, opt.dt_out);

  std::vector<RelaxSample> out{{0.0, initial.Pi}};
  std::size_t next = 1;
  auto check = [&](double Pi, double t) {
    HydroState s = initial;
    s.Pi = Pi;
    if (!std::isfinite(Pi) || !in_six_field_window(Pi / p, sp.alpha) || s.p(sp) != p || s.rho != rho) {
      std::ostringstream os;
      os << "relax: trajectory left the six-field window at t = " << t;
      fail(ErrorCode::WindowExit, os.str());
    }
  };

  if (initial.Pi == 0.0) {
    // fixed point
    for (; next * opt.dt_out <= opt.t_end * (1.0 + 1e-12); ++next) out.push_back({next * opt.dt_out, 0.0});
    return out;
  }
  while (stepper.current_time() < opt.t_end) {
    stepper.do_step(rhs);
    check(stepper.current_state()[0], stepper.current_time());
    State y;
    while (next * opt.dt_out <= std::min(stepper.current_time(), opt.t_end * (1.0 + 1e-12))) {
      const double t = next * opt.dt_out;
      stepper.calc_state(t, y);
      out.push_back({t, y[0]});
      ++next;
    }
  }
  return out;
}

}  // namespace polygas
