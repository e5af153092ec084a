#pragma once

#include "polygas/species.hpp"
#include "polygas/vec3.hpp"

namespace polygas {

/// Macroscopic state. T is stored, p is always derived as (rho/m) k T.
struct HydroState {
  double rho = 1.0;
  Vec3 U;
  double T = 1.0;
  double Pi = 0.0;
  Mat3 p_dev;  // symmetric, traceless
  Vec3 q;

  double p(const SpeciesParams& sp) const { return rho / sp.m * sp.k * T; }

  /// rho > 0, T > 0, p_dev symmetric and traceless. Throws Validation.
  void validate() const;

  static HydroState equilibrium(double rho, double T, Vec3 U = {});
  /// State with prescribed pressure p: T = p m / (rho k).
  static HydroState from_pressure(double rho, double p, const SpeciesParams& sp, double Pi = 0.0);
};

/// Six-field window -1 < Pi/p < (2/3)(alpha + 1).
bool in_six_field_window(double x, double alpha);
/// Throws OutOfValidityWindow when Pi/p is outside the window.
void require_six_field_window(const HydroState& h, const SpeciesParams& sp);

}  // namespace polygas
