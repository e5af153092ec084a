#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace polygas {

inline constexpr double kBoltzmannSI = 1.380649e-23;  // J/K

struct SpeciesParams {
  std::string name;
  double m = 1.0;       // molecular mass
  double alpha = 0.0;   // internal-degrees parameter, alpha = (D - 5) / 2
  double k = kBoltzmannSI;
  std::optional<double> D;

  /// Validates m > 0, alpha > -1 and the D/alpha relation. Throws Validation.
  void validate() const;

  static SpeciesParams dimensionless(double alpha, std::string name = "dimensionless");
  static SpeciesParams from_dof(std::string name, double m, double D, double k = kBoltzmannSI);
};

/// Angular part b of the cross section. Either a constant K, or a table of
/// b(cos theta) on a uniform grid over [-1, 1] (linear interpolation).
class AngularKernel {
 public:
  static AngularKernel constant(double K);
  static AngularKernel tabulated(std::vector<double> values);

  bool is_constant() const { return table_.empty(); }
  double K() const { return K_; }
  /// b(cos theta).
  double operator()(double cos_theta) const;
  /// ||b||_{L^1(d sigma)} = 2 pi int_{-1}^{1} b(mu) d mu.
  double norm() const { return norm_; }

 private:
  double K_ = 0.0;
  std::vector<double> table_;
  double norm_ = 0.0;
};

struct InteractionParams {
  double gamma = 1.0;
  AngularKernel b = AngularKernel::constant(1.0);

  void validate() const;
  static InteractionParams constant_K(double gamma, double K) { return {gamma, AngularKernel::constant(K)}; }
};

}  // namespace polygas
