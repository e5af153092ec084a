#pragma once

#include <array>
#include <utility>
#include <vector>

#include "polygas/hydro.hpp"
#include "polygas/species.hpp"

namespace polygas {

struct NConstants {
  double n1, n2;
};
NConstants n_constants(double alpha, double gamma);

/// Coefficients of the linearized productions: P_ij = a p<ij> + b Pi delta_ij, Q_i - U_k P_ki = c q_i.
struct ProductionLinear14 {
  double P_dev_coeff;
  double P_Pi_coeff;
  double Q_q_coeff;
};

struct Production14 {
  Mat3 P;
  Vec3 Q;
  ProductionLinear14 coeffs;
};

/// Requires a constant angular kernel (Validation otherwise).
ProductionLinear14 production_coeffs_14(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in);
Production14 production_14(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in);

struct RelaxationTimes {
  double tau_s, tau_Pi, tau_q;
};
RelaxationTimes relaxation_times(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in);

struct TransportCoefficients {
  double mu, nu_bulk, kappa;
  double tau_s, tau_Pi, tau_q;
  double Pr;
};
/// mu, nu, kappa from their closed forms; Pr = (alpha + 7/2)(k/m) mu / kappa.
TransportCoefficients transport_coefficients(const HydroState& h, const SpeciesParams& sp,
                                             const InteractionParams& in);

/// Prandtl number of the model; independent of the base state, m and K.
double prandtl_model(double alpha, double gamma);
double eucken_Pr(double alpha);
double delta_Pr(double gamma, double alpha, const HydroState& h, const SpeciesParams& sp,
                const InteractionParams& in);
double delta_Pr(double gamma, double alpha);

/// Root of Delta(., alpha) in the bracket. If the endpoints do not straddle a root
/// the bracket is scanned in 200 geometric sub-intervals. Throws NoSignChange.
double solve_gamma_star(double alpha, std::pair<double, double> bracket = {1e-3, 100.0});

/// gamma = 2 - 2 s; requires s < 1 (Domain).
double s_to_gamma(double s);

struct ClosureFluxes14 {
  std::array<std::array<std::array<double, 3>, 3>, 3> p_ijk{};
  Mat3 q_ij;
};
ClosureFluxes14 closure_fluxes_14(const HydroState& h, const SpeciesParams& sp);

struct DeltaPoint {
  double alpha, gamma, delta;
};
std::vector<DeltaPoint> delta_scan(const std::vector<double>& alphas, const std::vector<double>& gammas);

}  // namespace polygas
