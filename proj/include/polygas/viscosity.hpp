#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polygas {

struct ViscosityPoint {
  double T;   // K
  double mu;  // Pa s
  bool operator==(const ViscosityPoint&) const = default;
};

struct ViscosityDataset {
  std::string gas;
  std::vector<ViscosityPoint> points;
  std::string source;

  /// T strictly increasing, mu > 0, at least 3 points. Throws Validation.
  void validate() const;
  bool operator==(const ViscosityDataset&) const = default;
};

/// CSV with header T_K,mu_Pa_s and optional "# gas:" / "# source:" lines.
/// Parse errors carry the line number.
ViscosityDataset ingest_csv(const std::string& path);
ViscosityDataset parse_viscosity_csv(std::istream& in, const std::string& origin = "<stream>");
void emit_csv(std::ostream& out, const ViscosityDataset& d);

/// mu = A T^s by least squares on (log T, log mu).
struct FitResult {
  double A = 0.0;
  double s = 0.0;
  std::optional<double> gamma;     // absent for s >= 1
  std::optional<double> Pr_model;  // absent for s >= 1
  double Pr_eucken = 0.0;
  std::optional<double> rel_error;
  double residual_rms = 0.0;  // in log mu
  std::size_t n_points = 0;
};

/// Throws DegenerateFit when all T coincide. For s >= 1 the gamma-dependent
/// fields are left empty; use require_gamma to turn that into ExponentOutOfRange.
FitResult fit_power_law(const std::vector<ViscosityPoint>& points, double alpha);
FitResult fit_power_law(const ViscosityDataset& d, double alpha);
void require_gamma(const FitResult& fit);

}  // namespace polygas
