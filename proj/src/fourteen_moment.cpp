#include "polygas/fourteen_moment.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "polygas/errors.hpp"
#include "polygas/special_fn.hpp"

namespace polygas {
namespace {

double inv_gamma_big(double alpha, double gamma) {
  return std::exp(-log_gamma_fn(0.5 * (4.0 * alpha + gamma + 9.0)));
}

// Bracketed sums of the heat-flux production, weights of n1 and n2.
double q_bracket(double a, double g, const NConstants& n) {
  const double s = 4.0 * a + g;
  return std::pow(2.0, g + 5.0) * (s * (3.0 * a + g) + 57.0 * a + 15.0 * g + 60.0) * n.n1 +
         9.0 * (s * (2.0 * s + g * g + 38.0) + 7.0 * g * g + 160.0) * n.n2;
}

double dev_bracket(double a, double g, const NConstants& n) {
  return (4.0 * a + g + 7.0) * (std::pow(2.0, g + 2.0) * (g + 5.0) * n.n1 + 15.0 * n.n2);
}

}  // namespace

NConstants n_constants(double alpha, double gamma) {
  const double gg = gamma_fn(alpha + 0.5 * gamma + 1.0);
  const double ga = gamma_fn(alpha + 1.0);
  return {ga * ga * gamma_fn(0.5 * (gamma + 3.0)) * gamma_fn(0.5 * (gamma + 5.0)), std::numbers::pi * gg * gg};
}

ProductionLinear14 production_coeffs_14(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in) {
  if (!in.b.is_constant()) fail(ErrorCode::Validation, "fourteen-moment productions need a constant angular kernel");
  const double a = sp.alpha, g = in.gamma, p = h.p(sp);
  const auto n = n_constants(a, g);
  const double pre = in.b.K() * h.rho / sp.m * std::pow(p / h.rho, 0.5 * g) * std::sqrt(std::numbers::pi) *
                     inv_gamma_big(a, g);
  ProductionLinear14 c;
  c.P_dev_coeff = -pre * dev_bracket(a, g, n) / 15.0;
  c.P_Pi_coeff = -pre * (a + 2.5) * (std::pow(2.0, g + 4.0) / 3.0 * n.n1 + (4.0 * a + g + 4.0) / (a + 1.0) * n.n2);
  c.Q_q_coeff = -pre / (a + 3.5) / 72.0 * q_bracket(a, g, n);
  return c;
}

Production14 production_14(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in) {
  Production14 out;
  out.coeffs = production_coeffs_14(h, sp, in);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.P(i, j) = out.coeffs.P_dev_coeff * h.p_dev(i, j) + out.coeffs.P_Pi_coeff * h.Pi * kron(i, j);
  for (int i = 0; i < 3; ++i) {
    double conv = 0.0;
    for (int k = 0; k < 3; ++k) conv += h.U[k] * out.P(k, i);
    out.Q[i] = conv + out.coeffs.Q_q_coeff * h.q[i];
  }
  return out;
}

RelaxationTimes relaxation_times(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in) {
  const auto c = production_coeffs_14(h, sp, in);
  return {-1.0 / c.P_dev_coeff, -1.0 / c.P_Pi_coeff, -1.0 / c.Q_q_coeff};
}

TransportCoefficients transport_coefficients(const HydroState& h, const SpeciesParams& sp,
                                             const InteractionParams& in) {
  if (!in.b.is_constant()) fail(ErrorCode::Validation, "transport coefficients need a constant angular kernel");
  const double a = sp.alpha, g = in.gamma, K = in.b.K();
  const auto n = n_constants(a, g);
  const double base = std::pow(h.p(sp) / h.rho, 1.0 - 0.5 * g) * std::exp(log_gamma_fn(0.5 * (4.0 * a + g + 9.0))) /
                      std::sqrt(std::numbers::pi) / K;
  TransportCoefficients t;
  t.mu = sp.m * base * 15.0 / dev_bracket(a, g, n);
  t.nu_bulk = sp.m * base * 2.0 * (a + 1.0) * (a + 1.0) / (3.0 * (a + 2.5) * (a + 2.5)) /
              (std::pow(2.0, g + 4.0) / 3.0 * (a + 1.0) * n.n1 + (4.0 * a + g + 4.0) * n.n2);
  t.kappa = sp.k * base * (a + 3.5) * (a + 3.5) * 72.0 / q_bracket(a, g, n);
  const auto tau = relaxation_times(h, sp, in);
  t.tau_s = tau.tau_s;
  t.tau_Pi = tau.tau_Pi;
  t.tau_q = tau.tau_q;
  t.Pr = (a + 3.5) * sp.k / sp.m * t.mu / t.kappa;
  return t;
}

double prandtl_model(double alpha, double gamma) {
  const auto sp = SpeciesParams::dimensionless(alpha);
  return transport_coefficients(HydroState::equilibrium(1.0, 1.0), sp, InteractionParams::constant_K(gamma, 1.0)).Pr;
}

double eucken_Pr(double alpha) {
  if (!(alpha > -1.0)) fail(ErrorCode::Domain, "eucken_Pr: alpha must be > -1");
  return (4.0 * alpha + 14.0) / (4.0 * alpha + 19.0);
}

double delta_Pr(double gamma, double alpha, const HydroState& h, const SpeciesParams& sp,
                const InteractionParams& in) {
  SpeciesParams s = sp;
  s.alpha = alpha;
  InteractionParams i = in;
  i.gamma = gamma;
  return transport_coefficients(h, s, i).Pr - eucken_Pr(alpha);
}

double delta_Pr(double gamma, double alpha) { return prandtl_model(alpha, gamma) - eucken_Pr(alpha); }

double solve_gamma_star(double alpha, std::pair<double, double> bracket) {
  auto [lo, hi] = bracket;
  if (!(lo > 0.0 && hi > lo)) fail(ErrorCode::Domain, "solve_gamma_star: need 0 < lo < hi");
  auto f = [alpha](double g) { return delta_Pr(g, alpha); };
  double flo = f(lo), fhi = f(hi);
  if (flo * fhi > 0.0) {
    // scan for the first sign change
    const int n = 200;
    const double ratio = std::pow(hi / lo, 1.0 / n);
    double a = lo, fa = flo;
    bool found = false;
    for (int i = 1; i <= n; ++i) {
      const double b = i == n ? hi : lo * std::pow(ratio, i);
      const double fb = f(b);
      if (fa * fb <= 0.0) {
        lo = a, hi = b, flo = fa, fhi = fb;
        found = true;
        break;
      }
      a = b, fa = fb;
    }
    if (!found) {
      std::ostringstream os;
      os << "solve_gamma_star: Delta does not change sign on (" << bracket.first << ", " << bracket.second
         << ") for alpha = " << alpha;
      fail(ErrorCode::NoSignChange, os.str());
    }
  }
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52),
                                                   iters);
  const double root = 0.5 * (r.first + r.second);
  if (std::abs(f(root)) >= 1e-8) fail(ErrorCode::Numerical, "solve_gamma_star: root not converged");
  return root;
}

double s_to_gamma(double s) {
  if (!(s < 1.0)) fail(ErrorCode::Domain, "s_to_gamma: s must be < 1");
  return -2.0 * s + 2.0;
}

ClosureFluxes14 closure_fluxes_14(const HydroState& h, const SpeciesParams& sp) {
  const double a = sp.alpha, p = h.p(sp);
  ClosureFluxes14 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.p_ijk[i][j][k] = (h.q[i] * kron(j, k) + h.q[j] * kron(k, i) + h.q[k] * kron(i, j)) / (a + 3.5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double pij = h.p_dev(i, j) + (p + h.Pi) * kron(i, j);
      out.q_ij(i, j) = (a + 4.5) * p / h.rho * pij - p * p / h.rho * kron(i, j);
    }
  return out;
}

std::vector<DeltaPoint> delta_scan(const std::vector<double>& alphas, const std::vector<double>& gammas) {
  std::vector<DeltaPoint> out;
  out.reserve(alphas.size() * gammas.size());
  for (double a : alphas)
    for (double g : gammas) out.push_back({a, g, delta_Pr(g, a)});
  return out;
}

}  // namespace polygas
