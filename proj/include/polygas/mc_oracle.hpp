#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polygas/ensembles.hpp"
#include "polygas/monte_carlo.hpp"

namespace polygas {

struct MCConfig {
  std::uint64_t n = 1000000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

enum class Setting { NonWeighted, Weighted };

/// Test functions chi(v, I) for the weak form (lab-frame velocity).
enum class TestFunctionKind {
  Mass,          // m
  Momentum,      // m v_i
  Energy,        // m/2 |v|^2 + I
  TwiceKinetic,  // m |v|^2
  Stress,        // m v_i v_j
  EnergyFlux,    // (m/2 |v|^2 + I) v_i
  LogG,          // log(f I^-alpha), entropy production
};

struct TestFunction {
  TestFunctionKind kind = TestFunctionKind::Mass;
  int i = 0, j = 0;
};

struct WeakFormSpec {
  Setting setting = Setting::NonWeighted;
  TestFunction chi;
  DistributionSpec distribution;
  InteractionParams interaction;
};

/// (1/2) int f f_* (chi' + chi'_* - chi - chi_*) B phi psi (1-R) sqrt(R) over the collision
/// variables, importance-sampled from the Gaussian-Gamma envelope of the distribution.
/// abs_scale of the result is the mean of the summed |chi| terms, i.e. the size of what cancels.
MCEstimate mc_weak_form(const WeakFormSpec& spec, const MCConfig& mc);

enum class Production6Sampler { Reduced, Full };

/// Production of m|c|^2 for the six-field distribution.
MCEstimate oracle_production6(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in,
                              const MCConfig& mc, Production6Sampler sampler = Production6Sampler::Reduced);

struct Production14Estimate {
  std::array<std::array<MCEstimate, 3>, 3> P;  // P_ij assembled from the linearized integrals
  std::array<MCEstimate, 3> Q;                 // Q_i, convective part included analytically
  MCEstimate dev_coeff;    // coefficient of p<ij> (isotropic average of the off-diagonal entries)
  MCEstimate trace_coeff;  // sum_i P_ii / Pi
  MCEstimate q_coeff;      // coefficient of q_i (isotropic average)
  MCEstimate sum_P_rrtt, sum_P_rtrt, P1, P2, sum_Q_rr;
};

/// Linearized production integrals around the Maxwellian (evaluated at U = 0).
Production14Estimate oracle_production14(const HydroState& h, const SpeciesParams& sp, const InteractionParams& in,
                                         const MCConfig& mc);

/// Collision frequency of (v, I) against the Maxwellian of hydro (9-dimensional integral).
MCEstimate oracle_collision_freq(const MicroState& s, const HydroState& h, const SpeciesParams& sp,
                                 const InteractionParams& in, const MCConfig& mc);

struct EquivalenceResult {
  MCEstimate nonweighted;
  MCEstimate weighted;
};

/// Weighted (g = f I^-alpha, B^w = B I^a I_*^a phi psi) and non-weighted weak forms.
/// With independent = false both use one sample stream, otherwise the weighted side uses seed + 1.
EquivalenceResult equivalence_check(const DistributionSpec& f, const InteractionParams& in, const TestFunction& chi,
                                    const MCConfig& mc, bool independent = false);

/// D(f) = int Q(f, f) log(f I^-alpha).
MCEstimate entropy_sign_check(const DistributionSpec& f, const InteractionParams& in, const MCConfig& mc);

/// |closed - mc| <= 3 sigma, with a round-off floor relative to abs_scale.
bool agrees(double closed, const MCEstimate& e, double sigmas = 3.0);
double sigma_distance(double closed, const MCEstimate& e);

struct VerifyCheck {
  std::string name;
  double closed_form;
  double mc_value;
  double std_error;
  double sigmas;
  bool pass;
};

/// Oracle suite on the canonical state (rho = m = k = T = K = 1, alpha = 0, gamma = 1).
std::vector<VerifyCheck> run_verify_suite(const MCConfig& mc);

}  // namespace polygas
