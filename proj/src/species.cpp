#include "polygas/species.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polygas/errors.hpp"

namespace polygas {

void SpeciesParams::validate() const {
  if (!(m > 0.0) || !std::isfinite(m)) fail(ErrorCode::Validation, "species " + name + ": m must be > 0");
  if (!(alpha > -1.0) || !std::isfinite(alpha)) fail(ErrorCode::Validation, "species " + name + ": alpha must be > -1");
  if (!(k > 0.0)) fail(ErrorCode::Validation, "species " + name + ": k must be > 0");
  if (D && std::abs(alpha - (*D - 5.0) / 2.0) >= 1e-12) {
    fail(ErrorCode::Validation, "species " + name + ": alpha inconsistent with D");
  }
}

SpeciesParams SpeciesParams::dimensionless(double alpha, std::string name) {
  SpeciesParams sp{std::move(name), 1.0, alpha, 1.0, std::nullopt};
  sp.validate();
  return sp;
}

SpeciesParams SpeciesParams::from_dof(std::string name, double m, double D, double k) {
  SpeciesParams sp{std::move(name), m, (D - 5.0) / 2.0, k, D};
  sp.validate();
  return sp;
}

AngularKernel AngularKernel::constant(double K) {
  AngularKernel b;
  b.K_ = K;
  b.norm_ = 4.0 * std::numbers::pi * K;
  return b;
}

AngularKernel AngularKernel::tabulated(std::vector<double> values) {
  if (values.size() < 2) fail(ErrorCode::Validation, "tabulated angular kernel needs >= 2 nodes");
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) fail(ErrorCode::Validation, "tabulated angular kernel must be finite and >= 0");
  }
  AngularKernel b;
  b.table_ = std::move(values);
  // trapezoid rule is exact for the piecewise-linear interpolant
  const double h = 2.0 / static_cast<double>(b.table_.size() - 1);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < b.table_.size(); ++i) s += 0.5 * h * (b.table_[i] + b.table_[i + 1]);
  b.norm_ = 2.0 * std::numbers::pi * s;
  b.K_ = b.norm_ / (4.0 * std::numbers::pi);
  return b;
}

double AngularKernel::operator()(double mu) const {
  if (table_.empty()) return K_;
  const double n = static_cast<double>(table_.size() - 1);
  const double x = std::clamp((mu + 1.0) * 0.5 * n, 0.0, n);
  const auto i = std::min(static_cast<std::size_t>(x), table_.size() - 2);
  const double t = x - static_cast<double>(i);
  return (1.0 - t) * table_[i] + t * table_[i + 1];
}

void InteractionParams::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) fail(ErrorCode::Validation, "interaction: gamma must be > 0");
  if (!(b.norm() > 0.0)) fail(ErrorCode::Validation, "interaction: ||b|| must be > 0");
}

}  // namespace polygas
