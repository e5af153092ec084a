#include "polygas/polygas.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "json.hpp"
#include "polygas/config.hpp"
#include "polygas/ensembles.hpp"
#include "polygas/errors.hpp"
#include "polygas/fourteen_moment.hpp"
#include "polygas/mc_oracle.hpp"
#include "polygas/six_field.hpp"
#include "polygas/special_fn.hpp"
#include "polygas/tables.hpp"
#include "polygas/viscosity.hpp"

struct pg_species {
  polygas::SpeciesParams sp;
};
struct pg_interaction {
  polygas::InteractionParams in;
};

namespace {

using namespace polygas;

thread_local std::string g_last_error;

pg_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::Domain: return PG_ERR_DOMAIN;
    case ErrorCode::Overflow: return PG_ERR_OVERFLOW;
    case ErrorCode::DegenerateCollision: return PG_ERR_DEGENERATE_COLLISION;
    case ErrorCode::DegenerateDirection: return PG_ERR_DEGENERATE_DIRECTION;
    case ErrorCode::SingularConfiguration: return PG_ERR_SINGULAR_CONFIGURATION;
    case ErrorCode::OutOfValidityWindow: return PG_ERR_OUT_OF_VALIDITY_WINDOW;
    case ErrorCode::WindowExit: return PG_ERR_WINDOW_EXIT;
    case ErrorCode::NoSignChange: return PG_ERR_NO_SIGN_CHANGE;
    case ErrorCode::UnsupportedWeight: return PG_ERR_UNSUPPORTED_WEIGHT;
    case ErrorCode::DegenerateFit: return PG_ERR_DEGENERATE_FIT;
    case ErrorCode::ExponentOutOfRange: return PG_ERR_EXPONENT_OUT_OF_RANGE;
    case ErrorCode::Parse: return PG_ERR_PARSE;
    case ErrorCode::Validation: return PG_ERR_VALIDATION;
    case ErrorCode::Io: return PG_ERR_IO;
    case ErrorCode::Numerical: return PG_ERR_NUMERICAL;
  }
  return PG_ERR_INTERNAL;
}

template <class F>
pg_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return PG_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PG_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

HydroState to_hydro(const pg_hydro& h) {
  HydroState s;
  s.rho = h.rho;
  s.U = {h.U[0], h.U[1], h.U[2]};
  s.T = h.T;
  s.Pi = h.Pi;
  for (int i = 0; i < 9; ++i) s.p_dev.a[i] = h.p_dev[i];
  s.q = {h.q[0], h.q[1], h.q[2]};
  return s;
}

void from_hydro(const HydroState& s, pg_hydro* out) {
  out->rho = s.rho;
  for (int i = 0; i < 3; ++i) {
    out->U[i] = s.U[i];
    out->q[i] = s.q[i];
  }
  out->T = s.T;
  out->Pi = s.Pi;
  for (int i = 0; i < 9; ++i) out->p_dev[i] = s.p_dev.a[i];
}

MCConfig to_mc(const pg_mc_config* mc) {
  MCConfig c;
  if (mc) {
    c.n = mc->n;
    c.seed = mc->seed;
    c.workers = mc->workers == 0 ? 1 : mc->workers;
  }
  return c;
}

void to_estimate(const MCEstimate& e, pg_mc_estimate* out) {
  out->value = e.value;
  out->std_error = e.std_error;
  out->n_samples = e.n_samples;
  out->seed = e.seed;
}

}  // namespace

extern "C" {

const char* pg_version(void) { return "1.0.0"; }

const char* pg_status_name(pg_status s) {
  switch (s) {
    case PG_OK: return "ok";
    case PG_ERR_DOMAIN: return "domain";
    case PG_ERR_OVERFLOW: return "overflow";
    case PG_ERR_DEGENERATE_COLLISION: return "degenerate_collision";
    case PG_ERR_DEGENERATE_DIRECTION: return "degenerate_direction";
    case PG_ERR_SINGULAR_CONFIGURATION: return "singular_configuration";
    case PG_ERR_OUT_OF_VALIDITY_WINDOW: return "out_of_validity_window";
    case PG_ERR_WINDOW_EXIT: return "window_exit";
    case PG_ERR_NO_SIGN_CHANGE: return "no_sign_change";
    case PG_ERR_UNSUPPORTED_WEIGHT: return "unsupported_weight";
    case PG_ERR_DEGENERATE_FIT: return "degenerate_fit";
    case PG_ERR_EXPONENT_OUT_OF_RANGE: return "exponent_out_of_range";
    case PG_ERR_PARSE: return "parse";
    case PG_ERR_VALIDATION: return "validation";
    case PG_ERR_IO: return "io";
    case PG_ERR_NUMERICAL: return "numerical";
    case PG_ERR_NULL_ARGUMENT: return "null_argument";
    case PG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* pg_last_error_message(void) { return g_last_error.c_str(); }

void pg_string_free(char* s) { std::free(s); }

pg_status pg_species_create(const char* name, double m, double alpha, double k, pg_species** out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    SpeciesParams sp;
    sp.name = name ? name : "";
    sp.m = m;
    sp.alpha = alpha;
    sp.k = k > 0.0 ? k : kBoltzmannSI;
    sp.validate();
    *out = new pg_species{std::move(sp)};
  });
}

void pg_species_destroy(pg_species* sp) { delete sp; }

pg_status pg_species_get(const pg_species* sp, double* m, double* alpha, double* k) {
  if (!sp) return PG_ERR_NULL_ARGUMENT;
  if (m) *m = sp->sp.m;
  if (alpha) *alpha = sp->sp.alpha;
  if (k) *k = sp->sp.k;
  return PG_OK;
}

pg_status pg_interaction_create_constant(double gamma, double K, pg_interaction** out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    auto in = InteractionParams::constant_K(gamma, K);
    in.validate();
    *out = new pg_interaction{std::move(in)};
  });
}

pg_status pg_interaction_create_tabulated(double gamma, const double* b, size_t n, pg_interaction** out) {
  if (!out || !b) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    InteractionParams in{gamma, AngularKernel::tabulated(std::vector<double>(b, b + n))};
    in.validate();
    *out = new pg_interaction{std::move(in)};
  });
}

void pg_interaction_destroy(pg_interaction* in) { delete in; }

pg_status pg_interaction_get(const pg_interaction* in, double* gamma, double* b_norm) {
  if (!in) return PG_ERR_NULL_ARGUMENT;
  if (gamma) *gamma = in->in.gamma;
  if (b_norm) *b_norm = in->in.b.norm();
  return PG_OK;
}

pg_status pg_model_load(const char* path, pg_species** sp, pg_interaction** in) {
  if (!path || !sp || !in) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const Config c = Config::load(path);
    SpeciesParams s;
    s.name = c.has("species.name") ? c.str("species.name") : "";
    s.m = c.num("species.m");
    s.alpha = c.num("species.alpha");
    s.k = c.num_or("species.k", kBoltzmannSI);
    s.validate();
    auto ip = InteractionParams::constant_K(c.num("interaction.gamma"), c.num_or("interaction.K", 1.0));
    ip.validate();
    *sp = new pg_species{std::move(s)};
    *in = new pg_interaction{std::move(ip)};
  });
}

pg_status pg_hydro_equilibrium(double rho, double T, pg_hydro* out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto h = HydroState::equilibrium(rho, T);
    h.validate();
    from_hydro(h, out);
  });
}

pg_status pg_hydro_from_pressure(const pg_species* sp, double rho, double p, double Pi, pg_hydro* out) {
  if (!sp || !out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto h = HydroState::from_pressure(rho, p, sp->sp, Pi);
    h.validate();
    from_hydro(h, out);
  });
}

pg_status pg_hydro_pressure(const pg_species* sp, const pg_hydro* h, double* p) {
  if (!sp || !h || !p) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] { *p = to_hydro(*h).p(sp->sp); });
}

pg_status pg_gamma(double x, double* out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = gamma_fn(x); });
}

pg_status pg_hyp1f1_b3half(double a, double z, double* out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = hyp1f1_b3half(a, z); });
}

pg_status pg_collision_frequency_hat(double alpha, double gamma, double c_hat, double I_hat, double* out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = collision_frequency_hat(alpha, gamma, c_hat, I_hat); });
}

pg_status pg_collision_frequency(const pg_species* sp, const pg_interaction* in, const pg_hydro* h, const double v[3],
                                 double I, double* out) {
  if (!sp || !in || !h || !v || !out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto hs = to_hydro(*h);
    hs.validate();
    *out = collision_frequency(MicroState{{v[0], v[1], v[2]}, I}, hs, sp->sp, in->in);
  });
}

pg_status pg_collision_frequency_grid_csv(double alpha, double gamma, double c_max, double I_max, int n_c, int n_I,
                                          char** csv) {
  if (!csv) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    if (n_c < 1 || n_I < 1) fail(ErrorCode::Validation, "grid sizes must be positive");
    if (!(c_max >= 0.0) || !(I_max >= 0.0)) fail(ErrorCode::Validation, "grid ranges must be nonnegative");
    std::ostringstream os;
    emit_fig1_csv(os, alpha, gamma, linspace(0.0, c_max, n_c), linspace(0.0, I_max, n_I));
    *csv = dup_string(os.str());
  });
}

pg_status pg_six_field(const pg_species* sp, const pg_interaction* in, const pg_hydro* h, pg_six_field_report* out) {
  if (!sp || !in || !h || !out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto hs = to_hydro(*h);
    hs.validate();
    const auto r = six_field_report(hs, sp->sp, in->in);
    *out = {r.P, r.C_P, r.Sigma, r.K_noneq, r.dK_dPi, r.tau_Pi};
  });
}

pg_status pg_six_field_pde_residual(const pg_species* sp, const pg_hydro* h, double* out) {
  if (!sp || !h || !out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = K_pde_residual(to_hydro(*h), sp->sp); });
}

pg_status pg_six_field_relax_csv(const pg_species* sp, const pg_interaction* in, const pg_hydro* h, double t_end,
                                 double dt_out, char** csv) {
  if (!sp || !in || !h || !csv) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto hs = to_hydro(*h);
    hs.validate();
    RelaxOptions opt;
    opt.t_end = t_end;
    opt.dt_out = dt_out;
    const auto trace = relax_homogeneous(hs, sp->sp, in->in, opt);
    const double p = hs.p(sp->sp);
    std::ostringstream os;
    os << "t,Pi,Pi_over_p\n";
    for (const auto& s : trace) {
      os << format_number(s.t) << ',' << format_number(s.Pi) << ',' << format_number(s.Pi / p) << '\n';
    }
    *csv = dup_string(os.str());
  });
}

pg_status pg_fourteen_production(const pg_species* sp, const pg_interaction* in, const pg_hydro* h, pg_production14* out) {
  if (!sp || !in || !h || !out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto hs = to_hydro(*h);
    hs.validate();
    const auto r = production_14(hs, sp->sp, in->in);
    out->P_dev_coeff = r.coeffs.P_dev_coeff;
    out->P_Pi_coeff = r.coeffs.P_Pi_coeff;
    out->Q_q_coeff = r.coeffs.Q_q_coeff;
    for (int i = 0; i < 9; ++i) out->P[i] = r.P.a[i];
    for (int i = 0; i < 3; ++i) out->Q[i] = r.Q[i];
  });
}

pg_status pg_transport_coefficients(const pg_species* sp, const pg_interaction* in, const pg_hydro* h,
                                    pg_transport* out) {
  if (!sp || !in || !h || !out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto hs = to_hydro(*h);
    hs.validate();
    const auto t = transport_coefficients(hs, sp->sp, in->in);
    *out = {t.mu, t.nu_bulk, t.kappa, t.tau_s, t.tau_Pi, t.tau_q, t.Pr};
  });
}

pg_status pg_prandtl_model(double alpha, double gamma, double* out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = prandtl_model(alpha, gamma); });
}

pg_status pg_eucken_pr(double alpha, double* out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = eucken_Pr(alpha); });
}

pg_status pg_delta_pr(double gamma, double alpha, double* out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = delta_Pr(gamma, alpha); });
}

pg_status pg_solve_gamma_star(double alpha, double lo, double hi, double* out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = solve_gamma_star(alpha, {lo, hi}); });
}

pg_status pg_s_to_gamma(double s, double* out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = s_to_gamma(s); });
}

pg_status pg_delta_scan_csv(const double* alphas, size_t n_alpha, const double* gammas, size_t n_gamma, char** csv) {
  if (!csv) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto a = alphas ? std::vector<double>(alphas, alphas + n_alpha) : default_fig3_alphas();
    const auto g = gammas ? std::vector<double>(gammas, gammas + n_gamma) : default_fig3_gammas();
    std::ostringstream os;
    emit_fig3_csv(os, a, g);
    *csv = dup_string(os.str());
  });
}

pg_status pg_oracle_production6(const pg_species* sp, const pg_interaction* in, const pg_hydro* h,
                                const pg_mc_config* mc, pg_mc_estimate* out) {
  if (!sp || !in || !h || !out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto hs = to_hydro(*h);
    hs.validate();
    to_estimate(oracle_production6(hs, sp->sp, in->in, to_mc(mc)), out);
  });
}

pg_status pg_oracle_collision_freq(const pg_species* sp, const pg_interaction* in, const pg_hydro* h,
                                   const double v[3], double I, const pg_mc_config* mc, pg_mc_estimate* out) {
  if (!sp || !in || !h || !v || !out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto hs = to_hydro(*h);
    hs.validate();
    to_estimate(oracle_collision_freq(MicroState{{v[0], v[1], v[2]}, I}, hs, sp->sp, in->in, to_mc(mc)), out);
  });
}

pg_status pg_verify_json(const pg_mc_config* mc, char** json, int* all_pass) {
  if (!json) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const MCConfig c = to_mc(mc);
    const auto checks = run_verify_suite(c);
    nlohmann::ordered_json root;
    root["schema"] = 1;
    root["samples"] = c.n;
    root["seed"] = c.seed;
    root["workers"] = c.workers;
    bool ok = true;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& k : checks) {
      ok = ok && k.pass;
      arr.push_back({{"name", k.name},
                     {"closed_form", k.closed_form},
                     {"mc_value", k.mc_value},
                     {"std_error", k.std_error},
                     {"sigmas", k.sigmas},
                     {"pass", k.pass}});
    }
    root["all_pass"] = ok;
    root["checks"] = std::move(arr);
    *json = dup_string(root.dump(2) + "\n");
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

pg_status pg_fit_viscosity(const char* csv_path, double alpha, pg_fit* out, char** gas, char** fig2_csv) {
  if (!csv_path || !out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const auto d = ingest_csv(csv_path);
    const auto f = fit_power_law(d, alpha);
    out->A = f.A;
    out->s = f.s;
    out->has_gamma = f.gamma ? 1 : 0;
    out->gamma = f.gamma.value_or(0.0);
    out->Pr_model = f.Pr_model.value_or(0.0);
    out->Pr_eucken = f.Pr_eucken;
    out->rel_error = f.rel_error.value_or(0.0);
    out->residual_rms = f.residual_rms;
    out->n_points = f.n_points;
    if (gas) *gas = dup_string(d.gas);
    if (fig2_csv) {
      std::ostringstream os;
      emit_fig2_csv(os, d, f);
      *fig2_csv = dup_string(os.str());
    }
    require_gamma(f);
  });
}

pg_status pg_reproduce_tables(const char* config_path, char** csv, char** json, int* all_pass) {
  return guarded([&] {
    const std::string path = config_path ? std::string(config_path) : default_data_dir() + "/gases.cfg";
    const auto tables = reproduce_tables(Config::load(path));
    bool ok = true;
    for (const auto& t : tables) ok = ok && t.all_pass();
    if (csv) {
      std::ostringstream os;
      emit_tables_csv(os, tables);
      *csv = dup_string(os.str());
    }
    if (json) {
      std::ostringstream os;
      emit_tables_json(os, tables);
      *json = dup_string(os.str());
    }
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

pg_status pg_default_data_dir(char** out) {
  if (!out) return PG_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = dup_string(default_data_dir()); });
}

}  // extern "C"
