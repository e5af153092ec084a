// polygas command-line tool. Uses the C interface only.
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "polygas/polygas.h"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kValidation = 1, kNumerical = 2, kIo = 3 };

int exit_code(pg_status s) {
  switch (s) {
    case PG_OK: return kOk;
    case PG_ERR_IO: return kIo;
    case PG_ERR_OVERFLOW:
    case PG_ERR_WINDOW_EXIT:
    case PG_ERR_NO_SIGN_CHANGE:
    case PG_ERR_NUMERICAL:
    case PG_ERR_SINGULAR_CONFIGURATION:
    case PG_ERR_INTERNAL: return kNumerical;
    default: return kValidation;
  }
}

struct Failure {
  int code;
  std::string message;
};

void check(pg_status s) {
  if (s != PG_OK) throw Failure{exit_code(s), std::string(pg_status_name(s)) + ": " + pg_last_error_message()};
}

struct CString {
  char* p = nullptr;
  ~CString() { pg_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct Globals {
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000000;
  unsigned workers = 1;
  bool dimensionless = false;
  std::string out;
};

struct ModelOpts {
  std::string config;
  double alpha = 0.0;
  double m = 0.0;
  double gamma = 1.0;
  double K = 1.0;
};

struct StateOpts {
  double rho = 1.0;
  double T = 1.0;
  double Pi_over_p = 0.0;
  std::vector<double> U{0, 0, 0};
  std::vector<double> pdev{0, 0, 0, 0, 0};  // p11, p22, p12, p13, p23
  std::vector<double> q{0, 0, 0};
};

struct Model {
  std::unique_ptr<pg_species, decltype(&pg_species_destroy)> sp{nullptr, pg_species_destroy};
  std::unique_ptr<pg_interaction, decltype(&pg_interaction_destroy)> in{nullptr, pg_interaction_destroy};
};

Model make_model(const Globals& g, const ModelOpts& o, CLI::App* app) {
  Model m;
  if (!o.config.empty()) {
    pg_species* sp = nullptr;
    pg_interaction* in = nullptr;
    check(pg_model_load(o.config.c_str(), &sp, &in));
    m.sp.reset(sp);
    m.in.reset(in);
    double mass = 0, alpha = 0, k = 0, gamma = 0, norm = 0;
    pg_species_get(sp, &mass, &alpha, &k);
    pg_interaction_get(in, &gamma, &norm);
    // command-line values override the file
    if (app->count("--alpha")) alpha = o.alpha;
    if (app->count("--m")) mass = o.m;
    if (g.dimensionless) k = 1.0;
    if (app->count("--alpha") || app->count("--m") || g.dimensionless) {
      check(pg_species_create("", mass, alpha, k, &sp));
      m.sp.reset(sp);
    }
    if (app->count("--gamma") || app->count("--K")) {
      const double K = app->count("--K") ? o.K : norm / (4.0 * 3.14159265358979323846);
      check(pg_interaction_create_constant(app->count("--gamma") ? o.gamma : gamma, K, &in));
      m.in.reset(in);
    }
    return m;
  }
  double mass = o.m;
  if (g.dimensionless) {
    if (!app->count("--m")) mass = 1.0;
  } else if (!app->count("--m")) {
    throw Failure{kValidation, "validation: --m (molecular mass in kg) or --config is required unless --dimensionless"};
  }
  pg_species* sp = nullptr;
  pg_interaction* in = nullptr;
  check(pg_species_create("", mass, o.alpha, g.dimensionless ? 1.0 : 0.0, &sp));
  m.sp.reset(sp);
  check(pg_interaction_create_constant(o.gamma, o.K, &in));
  m.in.reset(in);
  return m;
}

pg_hydro make_state(const Model& m, const StateOpts& s) {
  pg_hydro h{};
  check(pg_hydro_equilibrium(s.rho, s.T, &h));
  double p = 0;
  check(pg_hydro_pressure(m.sp.get(), &h, &p));
  h.Pi = s.Pi_over_p * p;
  for (int i = 0; i < 3; ++i) {
    h.U[i] = s.U[i];
    h.q[i] = s.q[i];
  }
  h.p_dev[0] = s.pdev[0];
  h.p_dev[4] = s.pdev[1];
  h.p_dev[8] = -s.pdev[0] - s.pdev[1];
  h.p_dev[1] = h.p_dev[3] = s.pdev[2];
  h.p_dev[2] = h.p_dev[6] = s.pdev[3];
  h.p_dev[5] = h.p_dev[7] = s.pdev[4];
  return h;
}

pg_mc_config mc_config(const Globals& g) { return {g.samples, g.seed, g.workers}; }

void write_output(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary | std::ios::trunc);
  if (!f) throw Failure{kIo, "io: cannot open " + g.out + " for writing"};
  f << text;
  if (!f) throw Failure{kIo, "io: write failed for " + g.out};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Failure{kIo, "io: cannot open " + path + " for writing"};
  f << text;
  if (!f) throw Failure{kIo, "io: write failed for " + path};
}

json estimate_json(const pg_mc_estimate& e, double closed) {
  return json{{"mc_value", e.value},
              {"std_error", e.std_error},
              {"n_samples", e.n_samples},
              {"seed", e.seed},
              {"sigmas", e.std_error > 0 ? std::abs(closed - e.value) / e.std_error : 0.0}};
}

void add_model_opts(CLI::App* c, ModelOpts& o) {
  c->add_option("--config", o.config, "species/interaction file (key = value)")->check(CLI::ExistingFile);
  c->add_option("--alpha", o.alpha, "internal-degrees parameter alpha > -1");
  c->add_option("--m", o.m, "molecular mass");
  c->add_option("--gamma", o.gamma, "cross-section exponent gamma");
  c->add_option("--K", o.K, "constant angular kernel value");
}

void add_state_opts(CLI::App* c, StateOpts& s) {
  c->add_option("--rho", s.rho, "mass density");
  c->add_option("--T", s.T, "temperature");
  c->add_option("--Pi-over-p", s.Pi_over_p, "dynamic pressure relative to p");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kinetic model of a polyatomic gas: closures, transport coefficients and Monte Carlo checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--samples", g.samples, "Monte Carlo sample count")->capture_default_str();
  app.add_option("--workers", g.workers, "Monte Carlo worker threads")->capture_default_str();
  app.add_flag("--dimensionless", g.dimensionless, "use k = 1 and m = 1 unless given");
  app.add_option("--out", g.out, "output file (directory for reproduce-tables)");

  // collision-freq
  ModelOpts cf_m;
  double c_hat = -1, I_hat = -1, c_max = 5, I_max = 5;
  int n_c = 101, n_I = 101;
  bool cf_mc = false;
  auto* cf = app.add_subcommand("collision-freq", "dimensionless collision frequency (point or grid CSV)");
  add_model_opts(cf, cf_m);
  cf->add_option("--c-hat", c_hat, "peculiar speed sqrt(m/kT)|c|");
  cf->add_option("--I-hat", I_hat, "internal energy I/kT");
  cf->add_option("--c-max", c_max)->capture_default_str();
  cf->add_option("--I-max", I_max)->capture_default_str();
  cf->add_option("--n-c", n_c)->capture_default_str();
  cf->add_option("--n-I", n_I)->capture_default_str();
  cf->add_flag("--mc", cf_mc, "also estimate the defining integral (point mode)");

  // six-field
  ModelOpts sf_m;
  StateOpts sf_s;
  bool sf_mc = false;
  auto* sf = app.add_subcommand("six-field", "six-field production, entropy and relaxation time");
  add_model_opts(sf, sf_m);
  add_state_opts(sf, sf_s);
  sf->add_flag("--mc", sf_mc, "also estimate the production term by Monte Carlo");

  // six-field-relax
  ModelOpts sr_m;
  StateOpts sr_s;
  double t_end_tau = 5.0;
  int n_out = 200;
  auto* sr = app.add_subcommand("six-field-relax", "space-homogeneous relaxation of Pi (CSV t,Pi,Pi_over_p)");
  add_model_opts(sr, sr_m);
  add_state_opts(sr, sr_s);
  sr->add_option("--t-end", t_end_tau, "end time in units of the six-field tau_Pi (Pi decays on 3 tau_Pi)")->capture_default_str();
  sr->add_option("--n-out", n_out, "number of output intervals")->capture_default_str();

  // fourteen
  ModelOpts fm_m;
  StateOpts fm_s;
  auto* fm = app.add_subcommand("fourteen", "fourteen-moment productions and transport coefficients");
  add_model_opts(fm, fm_m);
  add_state_opts(fm, fm_s);
  fm->add_option("--U", fm_s.U, "bulk velocity")->expected(3)->delimiter(',');
  fm->add_option("--p-dev", fm_s.pdev, "stress deviator p11,p22,p12,p13,p23")->expected(5)->delimiter(',');
  fm->add_option("--q", fm_s.q, "heat flux")->expected(3)->delimiter(',');

  // prandtl-match
  std::vector<double> pm_alpha{0.0, 0.5};
  double lo = 1e-3, hi = 100.0;
  auto* pm = app.add_subcommand("prandtl-match", "gamma at which the model Prandtl number equals Eucken's");
  pm->add_option("--alpha", pm_alpha, "alpha values")->delimiter(',');
  pm->add_option("--lo", lo)->capture_default_str();
  pm->add_option("--hi", hi)->capture_default_str();

  // delta-scan
  std::vector<double> ds_alpha;
  double gamma_max = 6.0;
  int ds_n = 600;
  auto* ds = app.add_subcommand("delta-scan", "Prandtl difference Delta(gamma, alpha) (CSV alpha,gamma,delta)");
  ds->add_option("--alpha", ds_alpha, "alpha values (default 0,0.5,1,2,5)")->delimiter(',');
  ds->add_option("--gamma-max", gamma_max)->capture_default_str();
  ds->add_option("--n", ds_n, "gamma points on (0, gamma-max]")->capture_default_str();

  // fit-viscosity
  std::string fv_data, fv_fig2;
  double fv_alpha = 0.0;
  auto* fv = app.add_subcommand("fit-viscosity", "fit mu = A T^s to a CSV and compare Prandtl numbers");
  fv->add_option("--data", fv_data, "CSV with header T_K,mu_Pa_s")->required();
  fv->add_option("--alpha", fv_alpha, "internal-degrees parameter")->capture_default_str();
  fv->add_option("--fig2", fv_fig2, "write data and fitted curve CSV here");

  // reproduce-tables
  std::string rt_config;
  auto* rt = app.add_subcommand("reproduce-tables", "recompute the reference tables in gases.cfg with pass/fail per cell");
  rt->add_option("--config", rt_config, "gas configuration (default: shipped data/gases.cfg)");

  // verify
  auto* vf = app.add_subcommand("verify", "Monte Carlo oracle suite (JSON report)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cf->parsed()) {
      if (c_hat >= 0.0 || I_hat >= 0.0) {
        if (c_hat < 0.0) c_hat = 0.0;
        if (I_hat < 0.0) I_hat = 0.0;
        double nu = 0;
        check(pg_collision_frequency_hat(cf_m.alpha, cf_m.gamma, c_hat, I_hat, &nu));
        json j{{"schema", 1}, {"alpha", cf_m.alpha}, {"gamma", cf_m.gamma}, {"c_hat", c_hat}, {"I_hat", I_hat},
               {"nu_hat", nu}};
        if (cf_mc) {
          // canonical dimensionless state: rho = m = k = T = 1
          pg_species* sp = nullptr;
          pg_interaction* in = nullptr;
          check(pg_species_create("", 1.0, cf_m.alpha, 1.0, &sp));
          std::unique_ptr<pg_species, decltype(&pg_species_destroy)> sp_own(sp, pg_species_destroy);
          check(pg_interaction_create_constant(cf_m.gamma, cf_m.K, &in));
          std::unique_ptr<pg_interaction, decltype(&pg_interaction_destroy)> in_own(in, pg_interaction_destroy);
          pg_hydro h{};
          check(pg_hydro_equilibrium(1.0, 1.0, &h));
          const double v[3] = {c_hat, 0.0, 0.0};
          double closed = 0;
          check(pg_collision_frequency(sp, in, &h, v, I_hat, &closed));
          pg_mc_estimate e{};
          const auto mc = mc_config(g);
          check(pg_oracle_collision_freq(sp, in, &h, v, I_hat, &mc, &e));
          j["nu"] = closed;
          j["mc"] = estimate_json(e, closed);
        }
        write_output(g, j.dump(2) + "\n");
      } else {
        CString csv;
        check(pg_collision_frequency_grid_csv(cf_m.alpha, cf_m.gamma, c_max, I_max, n_c, n_I, &csv.p));
        write_output(g, csv.str());
      }
    } else if (sf->parsed()) {
      const Model m = make_model(g, sf_m, sf);
      const pg_hydro h = make_state(m, sf_s);
      pg_six_field_report r{};
      check(pg_six_field(m.sp.get(), m.in.get(), &h, &r));
      double res = 0;
      check(pg_six_field_pde_residual(m.sp.get(), &h, &res));
      json j{{"schema", 1}, {"rho", h.rho}, {"T", h.T}, {"Pi", h.Pi},
             {"P", r.P}, {"C_P", r.C_P}, {"Sigma", r.Sigma}, {"K_noneq", r.K_noneq},
             {"dK_dPi", r.dK_dPi}, {"tau_Pi", r.tau_Pi}, {"K_pde_residual", res}};
      if (sf_mc) {
        pg_mc_estimate e{};
        const auto mc = mc_config(g);
        check(pg_oracle_production6(m.sp.get(), m.in.get(), &h, &mc, &e));
        j["mc_P"] = estimate_json(e, r.P);
      }
      write_output(g, j.dump(2) + "\n");
    } else if (sr->parsed()) {
      const Model m = make_model(g, sr_m, sr);
      const pg_hydro h = make_state(m, sr_s);
      pg_six_field_report r{};
      pg_hydro heq = h;
      heq.Pi = 0.0;
      check(pg_six_field(m.sp.get(), m.in.get(), &heq, &r));
      if (n_out < 1) throw Failure{kValidation, "validation: --n-out must be positive"};
      const double t_end = t_end_tau * r.tau_Pi;
      CString csv;
      check(pg_six_field_relax_csv(m.sp.get(), m.in.get(), &h, t_end, t_end / n_out, &csv.p));
      write_output(g, csv.str());
    } else if (fm->parsed()) {
      const Model m = make_model(g, fm_m, fm);
      const pg_hydro h = make_state(m, fm_s);
      pg_production14 pr{};
      check(pg_fourteen_production(m.sp.get(), m.in.get(), &h, &pr));
      pg_hydro heq = h;
      heq.Pi = 0.0;
      pg_transport t{};
      check(pg_transport_coefficients(m.sp.get(), m.in.get(), &heq, &t));
      json P = json::array();
      for (int i = 0; i < 3; ++i) P.push_back({pr.P[3 * i], pr.P[3 * i + 1], pr.P[3 * i + 2]});
      json j{{"schema", 1},
             {"coefficients", {{"P_dev_coeff", pr.P_dev_coeff}, {"P_Pi_coeff", pr.P_Pi_coeff}, {"Q_q_coeff", pr.Q_q_coeff}}},
             {"P", P},
             {"Q", {pr.Q[0], pr.Q[1], pr.Q[2]}},
             {"transport", {{"mu", t.mu}, {"nu_bulk", t.nu_bulk}, {"kappa", t.kappa}, {"tau_s", t.tau_s},
                            {"tau_Pi", t.tau_Pi}, {"tau_q", t.tau_q}, {"Pr", t.Pr}}}};
      write_output(g, j.dump(2) + "\n");
    } else if (pm->parsed()) {
      json rows = json::array();
      for (double a : pm_alpha) {
        double gs = 0, pr = 0, pe = 0;
        check(pg_solve_gamma_star(a, lo, hi, &gs));
        check(pg_prandtl_model(a, gs, &pr));
        check(pg_eucken_pr(a, &pe));
        rows.push_back({{"alpha", a}, {"gamma_star", gs}, {"Pr", pr}, {"Pr_eucken", pe}});
      }
      write_output(g, json{{"schema", 1}, {"rows", rows}}.dump(2) + "\n");
    } else if (ds->parsed()) {
      if (ds_n < 1 || !(gamma_max > 0.0)) throw Failure{kValidation, "validation: need --n >= 1 and --gamma-max > 0"};
      std::vector<double> gammas(ds_n);
      for (int i = 0; i < ds_n; ++i) gammas[i] = gamma_max * (i + 1) / ds_n;
      CString csv;
      check(pg_delta_scan_csv(ds_alpha.empty() ? nullptr : ds_alpha.data(), ds_alpha.size(), gammas.data(),
                              gammas.size(), &csv.p));
      write_output(g, csv.str());
    } else if (fv->parsed()) {
      pg_fit f{};
      CString gas, fig2;
      const pg_status s = pg_fit_viscosity(fv_data.c_str(), fv_alpha, &f, &gas.p, fv_fig2.empty() ? nullptr : &fig2.p);
      if (s != PG_OK && s != PG_ERR_EXPONENT_OUT_OF_RANGE) check(s);
      const std::string msg = s == PG_OK ? "" : pg_last_error_message();
      json j{{"schema", 1}, {"gas", gas.str()}, {"alpha", fv_alpha}, {"n_points", f.n_points},
             {"A", f.A}, {"s", f.s}};
      if (f.has_gamma) {
        j["gamma"] = f.gamma;
        j["Pr_model"] = f.Pr_model;
        j["rel_error"] = f.rel_error;
      }
      j["Pr_eucken"] = f.Pr_eucken;
      j["residual_rms"] = f.residual_rms;
      if (!fv_fig2.empty()) write_file(fv_fig2, fig2.str());
      write_output(g, j.dump(2) + "\n");
      if (s != PG_OK) throw Failure{exit_code(s), std::string(pg_status_name(s)) + ": " + msg};
    } else if (rt->parsed()) {
      CString csv, js;
      int all = 0;
      check(pg_reproduce_tables(rt_config.empty() ? nullptr : rt_config.c_str(), &csv.p, &js.p, &all));
      if (g.out.empty()) {
        std::cout << js.str();
      } else {
        write_file(g.out + "/tables.csv", csv.str());
        write_file(g.out + "/tables.json", js.str());
      }
      if (!all) std::cerr << "note: some cells differ from the reference values (see the pass column)\n";
    } else if (vf->parsed()) {
      CString js;
      int all = 0;
      const auto mc = mc_config(g);
      check(pg_verify_json(&mc, &js.p, &all));
      write_output(g, js.str());
      if (!all) throw Failure{kNumerical, "verify: oracle mismatch"};
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return kOk;
}
