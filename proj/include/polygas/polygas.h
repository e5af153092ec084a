/* C interface to the polygas library. All functions return a pg_status;
   on failure pg_last_error_message() describes the error (thread-local).
   Strings returned through char** are owned by the caller: free with pg_string_free. */
#ifndef POLYGAS_H
#define POLYGAS_H

#include <stddef.h>
#include <stdint.h>

#if defined(POLYGAS_BUILDING_DLL)
#define PG_API __attribute__((visibility("default")))
#else
#define PG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pg_status {
  PG_OK = 0,
  PG_ERR_DOMAIN = 1,
  PG_ERR_OVERFLOW = 2,
  PG_ERR_DEGENERATE_COLLISION = 3,
  PG_ERR_DEGENERATE_DIRECTION = 4,
  PG_ERR_SINGULAR_CONFIGURATION = 5,
  PG_ERR_OUT_OF_VALIDITY_WINDOW = 6,
  PG_ERR_WINDOW_EXIT = 7,
  PG_ERR_NO_SIGN_CHANGE = 8,
  PG_ERR_UNSUPPORTED_WEIGHT = 9,
  PG_ERR_DEGENERATE_FIT = 10,
  PG_ERR_EXPONENT_OUT_OF_RANGE = 11,
  PG_ERR_PARSE = 12,
  PG_ERR_VALIDATION = 13,
  PG_ERR_IO = 14,
  PG_ERR_NUMERICAL = 15,
  PG_ERR_NULL_ARGUMENT = 16,
  PG_ERR_INTERNAL = 17
} pg_status;

typedef struct pg_species pg_species;
typedef struct pg_interaction pg_interaction;

/* Macroscopic state; p_dev is row-major, symmetric and traceless. */
typedef struct pg_hydro {
  double rho;
  double U[3];
  double T;
  double Pi;
  double p_dev[9];
  double q[3];
} pg_hydro;

typedef struct pg_mc_config {
  uint64_t n;
  uint64_t seed;
  unsigned workers;
} pg_mc_config;

typedef struct pg_mc_estimate {
  double value;
  double std_error;
  uint64_t n_samples;
  uint64_t seed;
} pg_mc_estimate;

PG_API const char* pg_version(void);
PG_API const char* pg_status_name(pg_status s);
PG_API const char* pg_last_error_message(void);
PG_API void pg_string_free(char* s);

/* Species and interaction handles. k <= 0 selects the SI Boltzmann constant. */
PG_API pg_status pg_species_create(const char* name, double m, double alpha, double k, pg_species** out);
PG_API void pg_species_destroy(pg_species* sp);
PG_API pg_status pg_species_get(const pg_species* sp, double* m, double* alpha, double* k);
PG_API pg_status pg_interaction_create_constant(double gamma, double K, pg_interaction** out);
/* b(cos theta) tabulated on a uniform grid over [-1, 1], n >= 2. */
PG_API pg_status pg_interaction_create_tabulated(double gamma, const double* b, size_t n, pg_interaction** out);
PG_API void pg_interaction_destroy(pg_interaction* in);
PG_API pg_status pg_interaction_get(const pg_interaction* in, double* gamma, double* b_norm);
/* Flat key = value file: species.name, species.m, species.alpha, species.k, interaction.gamma, interaction.K. */
PG_API pg_status pg_model_load(const char* path, pg_species** sp, pg_interaction** in);

PG_API pg_status pg_hydro_equilibrium(double rho, double T, pg_hydro* out);
PG_API pg_status pg_hydro_from_pressure(const pg_species* sp, double rho, double p, double Pi, pg_hydro* out);
PG_API pg_status pg_hydro_pressure(const pg_species* sp, const pg_hydro* h, double* p);

/* special functions */
PG_API pg_status pg_gamma(double x, double* out);
PG_API pg_status pg_hyp1f1_b3half(double a, double z, double* out);

/* ensembles */
PG_API pg_status pg_collision_frequency_hat(double alpha, double gamma, double c_hat, double I_hat, double* out);
PG_API pg_status pg_collision_frequency(const pg_species* sp, const pg_interaction* in, const pg_hydro* h,
                                        const double v[3], double I, double* out);
/* CSV c_hat,I_hat,nu_hat on [0,c_max] x [0,I_max]. */
PG_API pg_status pg_collision_frequency_grid_csv(double alpha, double gamma, double c_max, double I_max, int n_c,
                                                 int n_I, char** csv);

/* six-field closure */
typedef struct pg_six_field_report {
  double P, C_P, Sigma, K_noneq, dK_dPi, tau_Pi;
} pg_six_field_report;
PG_API pg_status pg_six_field(const pg_species* sp, const pg_interaction* in, const pg_hydro* h,
                              pg_six_field_report* out);
PG_API pg_status pg_six_field_pde_residual(const pg_species* sp, const pg_hydro* h, double* out);
/* CSV t,Pi,Pi_over_p. */
PG_API pg_status pg_six_field_relax_csv(const pg_species* sp, const pg_interaction* in, const pg_hydro* h, double t_end,
                                        double dt_out, char** csv);

/* fourteen-moment closure (constant angular kernel) */
typedef struct pg_production14 {
  double P_dev_coeff, P_Pi_coeff, Q_q_coeff;
  double P[9];
  double Q[3];
} pg_production14;
typedef struct pg_transport {
  double mu, nu_bulk, kappa, tau_s, tau_Pi, tau_q, Pr;
} pg_transport;
PG_API pg_status pg_fourteen_production(const pg_species* sp, const pg_interaction* in, const pg_hydro* h,
                                 pg_production14* out);
PG_API pg_status pg_transport_coefficients(const pg_species* sp, const pg_interaction* in, const pg_hydro* h,
                                           pg_transport* out);
PG_API pg_status pg_prandtl_model(double alpha, double gamma, double* out);
PG_API pg_status pg_eucken_pr(double alpha, double* out);
PG_API pg_status pg_delta_pr(double gamma, double alpha, double* out);
PG_API pg_status pg_solve_gamma_star(double alpha, double lo, double hi, double* out);
PG_API pg_status pg_s_to_gamma(double s, double* out);
/* CSV alpha,gamma,delta. Null arrays select the default grids. */
PG_API pg_status pg_delta_scan_csv(const double* alphas, size_t n_alpha, const double* gammas, size_t n_gamma,
                                   char** csv);

/* Monte Carlo oracles */
PG_API pg_status pg_oracle_production6(const pg_species* sp, const pg_interaction* in, const pg_hydro* h,
                                       const pg_mc_config* mc, pg_mc_estimate* out);
PG_API pg_status pg_oracle_collision_freq(const pg_species* sp, const pg_interaction* in, const pg_hydro* h,
                                          const double v[3], double I, const pg_mc_config* mc, pg_mc_estimate* out);
/* JSON report of the oracle suite; all_pass is set to 1 when every check passes. */
PG_API pg_status pg_verify_json(const pg_mc_config* mc, char** json, int* all_pass);

/* viscosity data and table reproduction */
typedef struct pg_fit {
  double A, s;
  int has_gamma; /* 0 when s >= 1 */
  double gamma, Pr_model, Pr_eucken, rel_error, residual_rms;
  size_t n_points;
} pg_fit;
/* Fit mu = A T^s to a T_K,mu_Pa_s CSV. fig2_csv (optional) receives T_K,mu_Pa_s,mu_fit_Pa_s.
   Returns PG_ERR_EXPONENT_OUT_OF_RANGE with out filled when s >= 1. */
PG_API pg_status pg_fit_viscosity(const char* csv_path, double alpha, pg_fit* out, char** gas, char** fig2_csv);
/* config_path may be null to use the shipped data/gases.cfg. */
PG_API pg_status pg_reproduce_tables(const char* config_path, char** csv, char** json, int* all_pass);
PG_API pg_status pg_default_data_dir(char** out);

#ifdef __cplusplus
}
#endif

#endif /* POLYGAS_H */
