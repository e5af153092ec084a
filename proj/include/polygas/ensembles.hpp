#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "polygas/hydro.hpp"
#include "polygas/microdynamics.hpp"
#include "polygas/monte_carlo.hpp"

namespace polygas {

enum class DistributionKind { Maxwellian, SixField, FourteenLinearized };

struct DistributionSpec {
  DistributionKind kind = DistributionKind::Maxwellian;
  HydroState hydro;
  SpeciesParams species;
};

/// Parameters of f = L I^alpha exp(-M|c|^2 - N I).
struct SixFieldParams {
  double M, N, L;
};
SixFieldParams six_field_params(const HydroState& h, const SpeciesParams& sp);

/// Evaluates one of the three distributions. Construction validates the spec.
class Distribution {
 public:
  explicit Distribution(DistributionSpec spec);

  const DistributionSpec& spec() const { return spec_; }
  double pressure() const { return p_; }

  double pdf(const MicroState& s) const;

  /// Gaussian-Gamma envelope f_env = (rho/m) N(c; 0, 1/(2M)) Gamma(I; alpha+1, 1/N).
  /// For the Maxwellian and the fourteen-moment case M = m/(2kT), N = 1/(kT).
  double env_M() const { return M_; }
  double env_N() const { return N_; }
  /// f / f_env; 1 for Maxwellian and six-field, 1 + phi for fourteen-moment.
  double envelope_ratio(const Vec3& c, double I) const;
  /// Fourteen-moment perturbation phi(c, I) (zero for the other kinds).
  double perturbation(const Vec3& c, double I) const;
  /// log(f I^-alpha); the fourteen-moment case must be positive.
  double log_g(const MicroState& s) const;

 private:
  DistributionSpec spec_;
  double p_ = 0.0;
  double M_ = 0.0, N_ = 0.0;
  double log_norm_ = 0.0;  // log L
};

double partition_Z(double T, const SpeciesParams& sp);

/// Velocity-moment selectors. Every weight except Momentum uses the peculiar velocity c = v - U.
enum class WeightKind {
  Mass,          // m
  Momentum,      // m v_i
  TwiceKinetic,  // m |c|^2
  Energy,        // m/2 |c|^2 + I
  Stress,        // m c_i c_j
  KineticFlux,   // m |c|^2 c_i
  EnergyFlux,    // (m/2 |c|^2 + I) c_i
  Triple,        // m c_i c_j c_k
  EnergyStress,  // (m/2 |c|^2 + I) c_i c_j
  Custom,        // only for internal use, rejected by moment()
};

struct Weight {
  WeightKind kind = WeightKind::Mass;
  int i = 0, j = 0, k = 0;
  double operator()(const SpeciesParams& sp, const Vec3& U, const Vec3& c, double I) const;
};

struct QuadratureMethod {
  int n_hermite = 40;
  int n_laguerre = 40;
};
struct MCMethod {
  std::uint64_t seed = 1;
  std::uint64_t n = 1000000;
  unsigned workers = 1;
};

double moment(const Distribution& f, const Weight& w, const QuadratureMethod& q = {});
MCEstimate moment(const Distribution& f, const Weight& w, const MCMethod& mc);

/// Minimum of f over the quadrature nodes (negative values flag a linearized f14 far from equilibrium).
double min_over_nodes(const Distribution& f, const QuadratureMethod& q = {});

struct EntropyResult {
  double h;   // entropy density
  Vec3 h_flux;  // U_j h
};

/// Six-field closed form (Maxwellian uses Pi = 0).
EntropyResult entropy_density(const Distribution& f);
/// -k int f log(f I^-alpha) by quadrature.
double entropy_density_numeric(const Distribution& f, const QuadratureMethod& q = {});

/// f = g I^alpha.
double rescale_weighted(double g_value, double I, double alpha);
/// g = f I^-alpha, I > 0.
double rescale_nonweighted(double f_value, double I, double alpha);

/// Dimensionless collision frequency nu_hat(c_hat, I_hat).
double collision_frequency_hat(double alpha, double gamma, double c_hat, double I_hat);

/// Collision frequency of a molecule (v, I) against the local Maxwellian of hydro.
double collision_frequency(const MicroState& s, const HydroState& hydro, const SpeciesParams& sp,
                           const InteractionParams& in);

struct CollisionFrequencyPoint {
  double c_hat, I_hat, nu_hat;
};
std::vector<CollisionFrequencyPoint> collision_frequency_grid(double alpha, double gamma,
                                                              const std::vector<double>& c_hat,
                                                              const std::vector<double>& I_hat);

std::vector<double> linspace(double a, double b, int n);

}  // namespace polygas
