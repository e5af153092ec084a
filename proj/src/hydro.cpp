#include "polygas/hydro.hpp"

#include <cmath>
#include <sstream>

#include "polygas/errors.hpp"

namespace polygas {

void HydroState::validate() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) fail(ErrorCode::Validation, "hydro: rho must be > 0");
  if (!(T > 0.0) || !std::isfinite(T)) fail(ErrorCode::Validation, "hydro: T must be > 0");
  const double scale = p_dev.frobenius();
  if (std::abs(p_dev.trace()) > 1e-12 * scale) fail(ErrorCode::Validation, "hydro: p_dev must be traceless");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(p_dev(i, j) - p_dev(j, i)) > 1e-12 * scale)
        fail(ErrorCode::Validation, "hydro: p_dev must be symmetric");
}

HydroState HydroState::equilibrium(double rho, double T, Vec3 U) {
  HydroState h;
  h.rho = rho;
  h.T = T;
  h.U = U;
  return h;
}

HydroState HydroState::from_pressure(double rho, double p, const SpeciesParams& sp, double Pi) {
  HydroState h;
  h.rho = rho;
  h.T = p * sp.m / (rho * sp.k);
  h.Pi = Pi;
  return h;
}

bool in_six_field_window(double x, double alpha) {
  return x > -1.0 && x < 2.0 / 3.0 * (alpha + 1.0);
}

void require_six_field_window(const HydroState& h, const SpeciesParams& sp) {
  const double x = h.Pi / h.p(sp);
  if (!in_six_field_window(x, sp.alpha)) {
    std::ostringstream os;
    os << "Pi/p = " << x << " outside (-1, " << 2.0 / 3.0 * (sp.alpha + 1.0) << ")";
    fail(ErrorCode::OutOfValidityWindow, os.str());
  }
}

}  // namespace polygas
