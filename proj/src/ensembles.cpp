#include "polygas/ensembles.hpp"

#include <cmath>
#include <numbers>

#include "polygas/errors.hpp"
#include "polygas/quadrature.hpp"
#include "polygas/special_fn.hpp"

namespace polygas {

SixFieldParams six_field_params(const HydroState& h, const SpeciesParams& sp) {
  require_six_field_window(h, sp);
  const double kT = sp.k * h.T;
  const double x = h.Pi / h.p(sp);
  const double M = sp.m / (2.0 * kT * (1.0 + x));
  const double N = 1.0 / (kT * (1.0 - 1.5 * x / (sp.alpha + 1.0)));
  if (!(M > 0.0 && N > 0.0)) fail(ErrorCode::OutOfValidityWindow, "six-field: M, N must be positive");
  const double L = h.rho / sp.m * std::pow(M / std::numbers::pi, 1.5) * std::pow(N, sp.alpha + 1.0) /
                   gamma_fn(sp.alpha + 1.0);
  return {M, N, L};
}

Distribution::Distribution(DistributionSpec spec) : spec_(std::move(spec)) {
  const auto& sp = spec_.species;
  const auto& h = spec_.hydro;
  sp.validate();
  h.validate();
  p_ = h.p(sp);
  const double kT = sp.k * h.T;
  if (spec_.kind == DistributionKind::SixField) {
    const auto six = six_field_params(h, sp);
    M_ = six.M;
    N_ = six.N;
  } else {
    M_ = sp.m / (2.0 * kT);
    N_ = 1.0 / kT;
  }
  log_norm_ = std::log(h.rho / sp.m) + 1.5 * std::log(M_ / std::numbers::pi) + (sp.alpha + 1.0) * std::log(N_) -
              log_gamma_fn(sp.alpha + 1.0);
}

double Distribution::perturbation(const Vec3& c, double I) const {
  if (spec_.kind != DistributionKind::FourteenLinearized) return 0.0;
  const auto& sp = spec_.species;
  const auto& h = spec_.hydro;
  const double a = sp.alpha, rho = h.rho, m = sp.m, p = p_;
  const double e = 0.5 * m * norm2(c) + I;
  const double qc = dot(h.q, c);
  double quad = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      quad += (h.p_dev(i, j) + (a + 2.5) / (a + 1.0) * kron(i, j) * h.Pi) * c[i] * c[j];
  return -rho / (p * p) * qc - 1.5 / (a + 1.0) * h.Pi * rho / (m * p * p) * e + rho / (2.0 * p * p) * quad +
         rho * rho / ((a + 3.5) * m * p * p * p) * qc * e;
}

double Distribution::envelope_ratio(const Vec3& c, double I) const {
  return 1.0 + perturbation(c, I);
}

double Distribution::pdf(const MicroState& s) const {
  const Vec3 c = s.v - spec_.hydro.U;
  const double env = std::exp(log_norm_ - M_ * norm2(c) - N_ * s.I) * std::pow(s.I, spec_.species.alpha);
  return env * envelope_ratio(c, s.I);
}

double Distribution::log_g(const MicroState& s) const {
  const Vec3 c = s.v - spec_.hydro.U;
  const double ratio = envelope_ratio(c, s.I);
  if (!(ratio > 0.0)) fail(ErrorCode::Domain, "log_g: distribution is not positive at this state");
  return log_norm_ - M_ * norm2(c) - N_ * s.I + std::log(ratio);
}

double partition_Z(double T, const SpeciesParams& sp) {
  if (!(T > 0.0)) fail(ErrorCode::Domain, "partition_Z: T must be > 0");
  const double kT = sp.k * T;
  return std::pow(kT, sp.alpha + 1.0) * gamma_fn(sp.alpha + 1.0);
}

double Weight::operator()(const SpeciesParams& sp, const Vec3& U, const Vec3& c, double I) const {
  const double m = sp.m;
  const double e = 0.5 * m * norm2(c) + I;
  switch (kind) {
    case WeightKind::Mass: return m;
    case WeightKind::Momentum: return m * (c[i] + U[i]);
    case WeightKind::TwiceKinetic: return m * norm2(c);
    case WeightKind::Energy: return e;
    case WeightKind::Stress: return m * c[i] * c[j];
    case WeightKind::KineticFlux: return m * norm2(c) * c[i];
    case WeightKind::EnergyFlux: return e * c[i];
    case WeightKind::Triple: return m * c[i] * c[j] * c[k];
    case WeightKind::EnergyStress: return e * c[i] * c[j];
    case WeightKind::Custom: break;
  }
  fail(ErrorCode::UnsupportedWeight, "moment: unsupported weight selector");
}

namespace {

void check_weight(const Weight& w) {
  if (w.kind == WeightKind::Custom || w.i < 0 || w.i > 2 || w.j < 0 || w.j > 2 || w.k < 0 || w.k > 2) {
    fail(ErrorCode::UnsupportedWeight, "moment: unsupported weight selector");
  }
}

// Sums g(c, I) f_env(c, I) / (rho/m) over the tensor grid; g receives the node and its weight.
template <class G>
void for_each_node(const Distribution& f, const QuadratureMethod& q, G&& g) {
  const auto gh = gauss_hermite(q.n_hermite);
  const auto gl = gauss_laguerre(q.n_laguerre, f.spec().species.alpha);
  const double sM = 1.0 / std::sqrt(f.env_M());
  const double norm = std::pow(std::numbers::pi, -1.5) / gamma_fn(f.spec().species.alpha + 1.0);
  for (std::size_t a = 0; a < gh.nodes.size(); ++a)
    for (std::size_t b = 0; b < gh.nodes.size(); ++b)
      for (std::size_t c = 0; c < gh.nodes.size(); ++c) {
        const Vec3 cv{gh.nodes[a] * sM, gh.nodes[b] * sM, gh.nodes[c] * sM};
        const double wv = gh.weights[a] * gh.weights[b] * gh.weights[c] * norm;
        for (std::size_t l = 0; l < gl.nodes.size(); ++l) g(cv, gl.nodes[l] / f.env_N(), wv * gl.weights[l]);
      }
}

}  // namespace

double moment(const Distribution& f, const Weight& w, const QuadratureMethod& q) {
  check_weight(w);
  const auto& sp = f.spec().species;
  const auto& U = f.spec().hydro.U;
  double sum = 0.0;
  for_each_node(f, q, [&](const Vec3& c, double I, double wt) { sum += wt * f.envelope_ratio(c, I) * w(sp, U, c, I); });
  return f.spec().hydro.rho / sp.m * sum;
}

MCEstimate moment(const Distribution& f, const Weight& w, const MCMethod& mc) {
  check_weight(w);
  const auto& sp = f.spec().species;
  const auto& U = f.spec().hydro.U;
  const double sd = 1.0 / std::sqrt(2.0 * f.env_M());
  const double scale = 1.0 / f.env_N();
  auto est = mc_integrate<1>(mc.n, mc.seed, mc.workers, [&](Sampler& s, std::array<double, 1>& x) {
    const Vec3 c = s.normal3(sd);
    const double I = s.gamma(sp.alpha + 1.0, scale);
    x[0] = f.envelope_ratio(c, I) * w(sp, U, c, I);
    return true;
  });
  return scaled(est[0], f.spec().hydro.rho / sp.m);
}

double min_over_nodes(const Distribution& f, const QuadratureMethod& q) {
  const auto& U = f.spec().hydro.U;
  double lo = INFINITY;
  for_each_node(f, q, [&](const Vec3& c, double I, double) { lo = std::min(lo, f.pdf({c + U, I})); });
  return lo;
}

EntropyResult entropy_density(const Distribution& f) {
  if (f.spec().kind == DistributionKind::FourteenLinearized) {
    fail(ErrorCode::Domain, "entropy_density: closed form exists for Maxwellian and six-field only");
  }
  const auto& sp = f.spec().species;
  const auto& h = f.spec().hydro;
  HydroState hh = h;
  if (f.spec().kind == DistributionKind::Maxwellian) hh.Pi = 0.0;
  const auto pars = six_field_params(hh, sp);
  const double hval = -sp.k * h.rho / sp.m * (-(sp.alpha + 2.5) + std::log(pars.L));
  return {hval, h.U * hval};
}

double entropy_density_numeric(const Distribution& f, const QuadratureMethod& q) {
  const auto& sp = f.spec().species;
  const auto& U = f.spec().hydro.U;
  double sum = 0.0;
  for_each_node(f, q, [&](const Vec3& c, double I, double wt) {
    sum += wt * f.envelope_ratio(c, I) * f.log_g({c + U, I});
  });
  return -sp.k * f.spec().hydro.rho / sp.m * sum;
}

double rescale_weighted(double g_value, double I, double alpha) {
  if (I < 0.0) fail(ErrorCode::Domain, "rescale_weighted: I must be >= 0");
  if (I == 0.0 && alpha < 0.0) fail(ErrorCode::Domain, "rescale_weighted: I^alpha is infinite at I = 0");
  return g_value * std::pow(I, alpha);
}

double rescale_nonweighted(double f_value, double I, double alpha) {
  if (I < 0.0) fail(ErrorCode::Domain, "rescale_nonweighted: I must be >= 0");
  if (I == 0.0 && alpha != 0.0) fail(ErrorCode::Domain, "rescale_nonweighted: undefined at I = 0 (removable)");
  return f_value * std::pow(I, -alpha);
}

double collision_frequency_hat(double alpha, double gamma, double c_hat, double I_hat) {
  if (!(gamma >= 0.0)) fail(ErrorCode::Domain, "collision_frequency: gamma must be >= 0");
  if (c_hat < 0.0 || I_hat < 0.0) fail(ErrorCode::Domain, "collision_frequency: c_hat, I_hat must be >= 0");
  const double a = alpha, g = gamma;
  const double ga1 = gamma_fn(a + 1.0);
  const double gag = gamma_fn(a + 0.5 * g + 1.0);
  const double g3 = gamma_fn(0.5 * (g + 3.0));
  const double z = 0.5 * c_hat * c_hat;
  const double kinetic = ga1 * g3 * g3 * std::pow(2.0, 0.5 * g + 1.0) / std::sqrt(std::numbers::pi) *
                         hyp1f1_b3half_scaled(0.5 * (g + 3.0), z);
  const double internal = 0.5 * std::sqrt(std::numbers::pi) * gag * (std::pow(I_hat, 0.5 * g) + gag / ga1);
  return std::exp(log_gamma_fn(a + 1.0) - log_gamma_fn(0.5 * (4.0 * a + g + 7.0))) * (kinetic + internal);
}

double collision_frequency(const MicroState& s, const HydroState& hydro, const SpeciesParams& sp,
                           const InteractionParams& in) {
  const double kT = sp.k * hydro.T;
  const double c_hat = std::sqrt(sp.m / kT) * norm(s.v - hydro.U);
  const double I_hat = s.I / kT;
  const double p_over_rho = kT / sp.m;
  return hydro.rho / sp.m * in.b.norm() * std::pow(p_over_rho, 0.5 * in.gamma) *
         collision_frequency_hat(sp.alpha, in.gamma, c_hat, I_hat);
}

std::vector<CollisionFrequencyPoint> collision_frequency_grid(double alpha, double gamma,
                                                              const std::vector<double>& c_hat,
                                                              const std::vector<double>& I_hat) {
  std::vector<CollisionFrequencyPoint> out;
  out.reserve(c_hat.size() * I_hat.size());
  for (double c : c_hat)
    for (double I : I_hat) out.push_back({c, I, collision_frequency_hat(alpha, gamma, c, I)});
  return out;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  if (n <= 0) return v;
  if (n == 1) return {a};
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / (n - 1));
  return v;
}

}  // namespace polygas
