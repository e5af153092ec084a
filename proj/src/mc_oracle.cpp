#include "polygas/mc_oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "polygas/errors.hpp"
#include "polygas/fourteen_moment.hpp"
#include "polygas/microdynamics.hpp"
#include "polygas/six_field.hpp"
#include "polygas/special_fn.hpp"

namespace polygas {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// Normalized Gaussian-Gamma envelope of a distribution and its sampler.
struct Envelope {
  Vec3 U;
  double M, N, alpha;
  double sd, scale, log_norm;

  explicit Envelope(const Distribution& f)
      : U(f.spec().hydro.U), M(f.env_M()), N(f.env_N()), alpha(f.spec().species.alpha) {
    sd = 1.0 / std::sqrt(2.0 * M);
    scale = 1.0 / N;
    log_norm = 1.5 * std::log(M / std::numbers::pi) + (alpha + 1.0) * std::log(N) - log_gamma_fn(alpha + 1.0);
  }

  MicroState draw(Sampler& s) const { return {U + s.normal3(sd), s.gamma(alpha + 1.0, scale)}; }

  double density(const MicroState& x) const {
    return std::exp(log_norm - M * norm2(x.v - U) - N * x.I) * std::pow(x.I, alpha);
  }
};

double eval_chi(const TestFunction& chi, const Distribution& f, const MicroState& x) {
  const double m = f.spec().species.m;
  switch (chi.kind) {
    case TestFunctionKind::Mass: return m;
    case TestFunctionKind::Momentum: return m * x.v[chi.i];
    case TestFunctionKind::Energy: return 0.5 * m * norm2(x.v) + x.I;
    case TestFunctionKind::TwiceKinetic: return m * norm2(x.v);
    case TestFunctionKind::Stress: return m * x.v[chi.i] * x.v[chi.j];
    case TestFunctionKind::EnergyFlux: return (0.5 * m * norm2(x.v) + x.I) * x.v[chi.i];
    case TestFunctionKind::LogG: return f.log_g(x);
  }
  fail(ErrorCode::UnsupportedWeight, "weak form: unsupported test function");
}

bool degenerate(const Vec3& u, double speed_scale) { return norm(u) < 1e-14 * speed_scale; }

// One weak-form sample. Writes (integrand, |terms|) for the non-weighted and weighted settings.
bool weak_form_sample(Sampler& s, const Distribution& f, const Envelope& env, const InteractionParams& in,
                      const TestFunction& chi, std::array<double, 4>& x) {
  const auto& sp = f.spec().species;
  CollisionState st;
  st.a = env.draw(s);
  st.b = env.draw(s);
  st.angles = {s.uniform(), s.uniform(), s.unit_sphere()};
  if (degenerate(st.a.v - st.b.v, env.sd)) return false;
  const CollisionState post = collide(st, sp);

  const double c0 = eval_chi(chi, f, st.a), c1 = eval_chi(chi, f, st.b);
  const double c2 = eval_chi(chi, f, post.a), c3 = eval_chi(chi, f, post.b);
  const double delta = c2 + c3 - c0 - c1;
  const double mag = std::abs(c0) + std::abs(c1) + std::abs(c2) + std::abs(c3);

  const double fa = f.pdf(st.a), fb = f.pdf(st.b);
  const double env_ab = env.density(st.a) * env.density(st.b);
  const double a = sp.alpha;

  // non-weighted: f f_* / (I I_*)^alpha dA
  const double w_nw = fa * fb / std::pow(st.a.I * st.b.I, a) * measure_weight(st, sp, in) * kFourPi / env_ab;
  // weighted: g g_* B^w (1 - R) sqrt(R)
  const double ga = rescale_nonweighted(fa, st.a.I, a), gb = rescale_nonweighted(fb, st.b.I, a);
  const double r = st.angles.r, R = st.angles.R;
  const double Bw = cross_section_model3(st, sp, in) * std::pow(st.a.I, a) * std::pow(st.b.I, a) *
                    std::pow(r * (1.0 - r), a) * std::pow(1.0 - R, 2.0 * a);
  const double w_w = ga * gb * Bw * (1.0 - R) * std::sqrt(R) * kFourPi / env_ab;

  x = {0.5 * w_nw * delta, 0.5 * std::abs(w_nw) * mag, 0.5 * w_w * delta, 0.5 * std::abs(w_w) * mag};
  return true;
}

MCEstimate with_scale(MCEstimate e, const MCEstimate& mag) {
  e.abs_scale = mag.value;
  return e;
}

}  // namespace

MCEstimate mc_weak_form(const WeakFormSpec& spec, const MCConfig& mc) {
  const Distribution f(spec.distribution);
  spec.interaction.validate();
  const Envelope env(f);
  auto est = mc_integrate<4>(mc.n, mc.seed, mc.workers, [&](Sampler& s, std::array<double, 4>& x) {
    return weak_form_sample(s, f, env, spec.interaction, spec.chi, x);
  });
  return spec.setting == Setting::NonWeighted ? with_scale(est[0], est[1]) : with_scale(est[2], est[3]);
}

EquivalenceResult equivalence_check(const DistributionSpec& fs, const InteractionParams& in, const TestFunction& chi,
                                    const MCConfig& mc, bool independent) {
  const Distribution f(fs);
  in.validate();
  const Envelope env(f);
  auto draw = [&](Sampler& s, std::array<double, 4>& x) { return weak_form_sample(s, f, env, in, chi, x); };
  auto a = mc_integrate<4>(mc.n, mc.seed, mc.workers, draw);
  if (!independent) return {with_scale(a[0], a[1]), with_scale(a[2], a[3])};
  auto b = mc_integrate<4>(mc.n, mc.seed + 1, mc.workers, draw);
  return {with_scale(a[0], a[1]), with_scale(b[2], b[3])};
}

MCEstimate entropy_sign_check(const DistributionSpec& fs, const InteractionParams& in, const MCConfig& mc) {
  return mc_weak_form({Setting::NonWeighted, {TestFunctionKind::LogG}, fs, in}, mc);
}

MCEstimate oracle_production6(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in,
                              const MCConfig& mc, Production6Sampler sampler) {
  require_six_field_window_guarded(h, sp);
  in.validate();
  const Distribution f({DistributionKind::SixField, h, sp});
  const double m = sp.m, a = sp.alpha, g = in.gamma;
  const double dens2 = std::pow(h.rho / m, 2.0);

  if (sampler == Production6Sampler::Reduced) {
    // relative velocity u = c - c_* ~ N(0, 1/M); the centre of mass drops out of Delta(m|c|^2)
    const double sd_u = 1.0 / std::sqrt(f.env_M());
    const double scale = 1.0 / f.env_N();
    auto est = mc_integrate<1>(mc.n, mc.seed, mc.workers, [&](Sampler& s, std::array<double, 1>& x) {
      CollisionState st;
      st.a.v = s.normal3(sd_u);
      st.a.I = s.gamma(a + 1.0, scale);
      st.b.I = s.gamma(a + 1.0, scale);
      st.angles.r = s.uniform();
      st.angles.R = s.uniform();
      const double u2 = norm2(st.a.v);
      const double E = 0.25 * m * u2 + st.a.I + st.b.I;
      const double delta = 2.0 * st.angles.R * E - 0.5 * m * u2;
      x[0] = delta * cross_section_model3_radial(st, sp, g) * rR_weight(st.angles.r, st.angles.R, a);
      return true;
    });
    return scaled(est[0], 0.5 * dens2 * in.b.norm());
  }

  const Envelope env(f);
  auto est = mc_integrate<1>(mc.n, mc.seed, mc.workers, [&](Sampler& s, std::array<double, 1>& x) {
    CollisionState st;
    st.a = env.draw(s);
    st.b = env.draw(s);
    st.angles = {s.uniform(), s.uniform(), s.unit_sphere()};
    if (degenerate(st.a.v - st.b.v, env.sd)) return false;
    const auto post = collide(st, sp);
    const Vec3& U = h.U;
    const double delta =
        m * (norm2(post.a.v - U) + norm2(post.b.v - U) - norm2(st.a.v - U) - norm2(st.b.v - U));
    x[0] = delta * kFourPi * cross_section_model3(st, sp, in) * rR_weight(st.angles.r, st.angles.R, a);
    return true;
  });
  return scaled(est[0], 0.5 * dens2);
}

Production14Estimate oracle_production14(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in,
                                         const MCConfig& mc) {
  sp.validate();
  h.validate();
  in.validate();
  const double m = sp.m, a = sp.alpha, rho = h.rho, p = h.p(sp);
  const double kT = sp.k * h.T;
  const double sd = std::sqrt(kT / m);
  const double cP = rho / (2.0 * p * p);
  const double cQ = rho * rho / ((a + 3.5) * m * p * p * p);
  const double cPi = (a + 2.5) / (a + 1.0);
  Mat3 A = h.p_dev;
  for (int i = 0; i < 3; ++i) A(i, i) += cPi * h.Pi;

  enum : std::size_t { kP = 0, kQ = 9, kDev = 12, kTrace, kQc, kRrtt, kRtrt, kP1, kP2, kQrr, kCount };
  auto est = mc_integrate<kCount>(mc.n, mc.seed, mc.workers, [&](Sampler& s, std::array<double, kCount>& x) {
    CollisionState st;
    st.a = {s.normal3(sd), s.gamma(a + 1.0, kT)};
    st.b = {s.normal3(sd), s.gamma(a + 1.0, kT)};
    st.angles = {s.uniform(), s.uniform(), s.unit_sphere()};
    if (degenerate(st.a.v - st.b.v, sd)) return false;
    const auto post = collide(st, sp);
    const double w = kFourPi * cross_section_model3(st, sp, in) * rR_weight(st.angles.r, st.angles.R, a);

    const Vec3 &c = st.a.v, &cs = st.b.v, &cp = post.a.v, &cps = post.b.v;
    const double e = 0.5 * m * norm2(c) + st.a.I, es = 0.5 * m * norm2(cs) + st.b.I;
    const double ep = 0.5 * m * norm2(cp) + post.a.I, eps = 0.5 * m * norm2(cps) + post.b.I;
    Mat3 dcc;
    Vec3 dec;
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) dcc(k, l) = cp[k] * cp[l] + cps[k] * cps[l] - c[k] * c[l] - cs[k] * cs[l];
      dec[k] = ep * cp[k] + eps * cps[k] - e * c[k] - es * cs[k];
    }
    double contracted = 0.0, rtrt = 0.0;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        contracted += A(k, l) * dcc(k, l);
        rtrt += c[k] * c[l] * dcc(k, l);
      }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x[kP + 3 * i + j] = w * cP * m * c[i] * c[j] * contracted;
    const double qdec = dot(h.q, dec);
    for (int i = 0; i < 3; ++i) {
      double conv = 0.0;
      for (int k = 0; k < 3; ++k) conv += h.U[k] * x[kP + 3 * k + i];
      x[kQ + i] = conv + w * cQ * e * c[i] * qdec;
    }
    const double rrtt = m * norm2(c) * dcc.trace();
    rtrt *= m;
    const double qrr = e * dot(c, dec);
    x[kDev] = w * cP * 2.0 * m * (c[0] * c[1] * dcc(0, 1) + c[0] * c[2] * dcc(0, 2) + c[1] * c[2] * dcc(1, 2)) / 3.0;
    x[kTrace] = w * cP * cPi * rrtt;
    x[kQc] = w * cQ * qrr / 3.0;
    x[kRrtt] = w * rrtt;
    x[kRtrt] = w * rtrt;
    x[kP1] = w * (2.0 * rrtt - rtrt) / 15.0;
    x[kP2] = w * (3.0 * rtrt - rrtt) / 30.0;
    x[kQrr] = w * qrr;
    return true;
  });

  const double dens2 = std::pow(rho / m, 2.0);
  Production14Estimate out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out.P[i][j] = scaled(est[kP + 3 * i + j], dens2);
    out.Q[i] = scaled(est[kQ + i], dens2);
  }
  out.dev_coeff = scaled(est[kDev], dens2);
  out.trace_coeff = scaled(est[kTrace], dens2);
  out.q_coeff = scaled(est[kQc], dens2);
  out.sum_P_rrtt = scaled(est[kRrtt], dens2);
  out.sum_P_rtrt = scaled(est[kRtrt], dens2);
  out.P1 = scaled(est[kP1], dens2);
  out.P2 = scaled(est[kP2], dens2);
  out.sum_Q_rr = scaled(est[kQrr], dens2);
  return out;
}

MCEstimate oracle_collision_freq(const MicroState& state, const HydroState& h, const SpeciesParams& sp,
                                 const InteractionParams& in, const MCConfig& mc) {
  sp.validate();
  h.validate();
  in.validate();
  const double kT = sp.k * h.T;
  const double sd = std::sqrt(kT / sp.m);
  const double a = sp.alpha;
  auto est = mc_integrate<1>(mc.n, mc.seed, mc.workers, [&](Sampler& s, std::array<double, 1>& x) {
    CollisionState st;
    st.a = state;
    st.b = {h.U + s.normal3(sd), s.gamma(a + 1.0, kT)};
    st.angles = {s.uniform(), s.uniform(), s.unit_sphere()};
    x[0] = kFourPi * cross_section_model3(st, sp, in) * rR_weight(st.angles.r, st.angles.R, a);
    return true;
  });
  return scaled(est[0], h.rho / sp.m);
}

bool agrees(double closed, const MCEstimate& e, double sigmas) {
  // floor: double round-off of integrands that cancel exactly sample by sample
  const double floor = 1e-12 * std::max(e.abs_scale, std::abs(closed));
  return std::abs(closed - e.value) <= sigmas * e.std_error + floor;
}

double sigma_distance(double closed, const MCEstimate& e) {
  const double d = std::abs(closed - e.value);
  if (d == 0.0) return 0.0;
  if (e.std_error == 0.0) return std::numeric_limits<double>::infinity();
  return d / e.std_error;
}

std::vector<VerifyCheck> run_verify_suite(const MCConfig& mc) {
  const auto sp = SpeciesParams::dimensionless(0.0);
  const auto in = InteractionParams::constant_K(1.0, 1.0);
  std::vector<VerifyCheck> out;
  auto add = [&](std::string name, double closed, const MCEstimate& e) {
    out.push_back({std::move(name), closed, e.value, e.std_error, sigma_distance(closed, e), agrees(closed, e)});
  };
  MCConfig cfg = mc;

  for (double x : {-0.5, 0.1, 0.3}) {
    const auto h = HydroState::from_pressure(1.0, 1.0, sp, x);
    add("production6(Pi/p=" + std::to_string(x).substr(0, 4) + ")", production_P(h, sp, in).P,
        oracle_production6(h, sp, in, cfg));
    ++cfg.seed;
  }

  const auto eq = HydroState::equilibrium(1.0, 1.0);
  const auto closed14 = production_coeffs_14(eq, sp, in);
  const auto est14 = oracle_production14(eq, sp, in, cfg);
  ++cfg.seed;
  add("production14.dev_coeff", closed14.P_dev_coeff, est14.dev_coeff);
  add("production14.trace_coeff", 3.0 * closed14.P_Pi_coeff, est14.trace_coeff);
  add("production14.q_coeff", closed14.Q_q_coeff, est14.q_coeff);

  for (auto [c, I] : {std::pair{0.0, 0.0}, std::pair{1.0, 1.0}, std::pair{3.0, 0.5}}) {
    const MicroState st{{c, 0.0, 0.0}, I};
    add("collision_freq(c=" + std::to_string(c).substr(0, 3) + ",I=" + std::to_string(I).substr(0, 3) + ")",
        collision_frequency(st, eq, sp, in), oracle_collision_freq(st, eq, sp, in, cfg));
    ++cfg.seed;
  }

  HydroState h6 = HydroState::from_pressure(1.0, 1.0, sp, 0.3);
  const DistributionSpec f6{DistributionKind::SixField, h6, sp};
  add("weak_form.mass", 0.0, mc_weak_form({Setting::NonWeighted, {TestFunctionKind::Mass}, f6, in}, cfg));
  ++cfg.seed;
  add("weak_form.energy", 0.0, mc_weak_form({Setting::NonWeighted, {TestFunctionKind::Energy}, f6, in}, cfg));
  ++cfg.seed;
  const auto D = entropy_sign_check(f6, in, cfg);
  add("entropy_production", entropy_production_Sigma(h6, sp, in), scaled(D, -sp.k));
  return out;
}

}  // namespace polygas
