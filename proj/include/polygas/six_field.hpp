#pragma once

#include <utility>
#include <vector>

#include "polygas/hydro.hpp"
#include "polygas/species.hpp"

namespace polygas {

struct KConstants {
  double k1, k2;
};
KConstants k_constants(double alpha, double gamma);

struct ProductionSix {
  double P;    // production of m|c|^2
  double C_P;  // positive shape factor
};

/// Relative distance kept from the window endpoints, where moments of f6 diverge.
inline constexpr double kSixFieldGuard = 1e-9;

/// Throws OutOfValidityWindow unless -1 + eps < Pi/p < (2/3)(alpha + 1) - eps.
void require_six_field_window_guarded(const HydroState& h, const SpeciesParams& sp);

double C_P(double x, double alpha, double gamma);
ProductionSix production_P(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in);
double entropy_production_Sigma(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in);
double K_noneq(const HydroState& h, const SpeciesParams& sp);
double dK_dPi(const HydroState& h, const SpeciesParams& sp);
/// Residual of the first-order PDE that the nonequilibrium entropy must satisfy
/// (state written through rho, p, Pi; rho and p derivatives by central differences).
double K_pde_residual(const HydroState& h, const SpeciesParams& sp);
double tau_Pi_six(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in);

struct SixFieldReport {
  double P, C_P, Sigma, K_noneq, dK_dPi, tau_Pi;
};
SixFieldReport six_field_report(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in);

struct RelaxSample {
  double t, Pi;
};

struct RelaxOptions {
  double t_end = 1.0;
  double dt_out = 0.01;  // output spacing
  double rtol = 1e-8;
  double atol_rel = 1e-14;  // absolute tolerance in units of p
};

/// Space-homogeneous relaxation: rho, U, p stay fixed and dPi/dt = P(Pi)/3.
/// Adaptive Dormand-Prince 5(4); throws WindowExit if an accepted step leaves the window.
std::vector<RelaxSample> relax_homogeneous(const HydroState& initial, const SpeciesParams& sp,
                                           const InteractionParams& in, const RelaxOptions& opt);

}  // namespace polygas
