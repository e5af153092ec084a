#pragma once

#include <vector>

namespace polygas {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for weight exp(-x^2) on the real line.
QuadratureRule gauss_hermite(int n);

/// Generalized Gauss-Laguerre rule for weight x^alpha exp(-x) on [0, inf).
QuadratureRule gauss_laguerre(int n, double alpha);

}  // namespace polygas
