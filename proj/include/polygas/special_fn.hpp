#pragma once

// Scalar special functions used by every closed form in the library.

namespace polygas {

/// Gamma function for x > 0 (Lanczos, g = 7, 9 terms).
/// Throws Domain for x <= 0 and Overflow when the result is not representable.
double gamma_fn(double x);

/// log Gamma(x) for x > 0; never overflows in the supported range.
double log_gamma_fn(double x);

/// Confluent hypergeometric 1F1(a; 3/2; z) for a > 0, z >= 0.
double hyp1f1_b3half(double a, double z);

/// exp(-z) * 1F1(a; 3/2; z), finite for arbitrarily large z.
double hyp1f1_b3half_scaled(double a, double z);

/// Beta-type constant from integrating the (r, R) dependence of the collision
/// kernel:
///   C_(a,b,c) = int_[0,1]^2 (r(1-r))^alpha (1-R)^(2 alpha+1) R^(1/2)
///               (1-R)^a R^b r^c dr dR
double c_const(double alpha, double a, double b, double c);

}  // namespace polygas
