#pragma once
// Independent reference computations shared by the unit tests and the acceptance runner.

#include <Eigen/Dense>
#include <array>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "polygas/microdynamics.hpp"

namespace oracle {

/// 1F1(a; 3/2; z) by plain long-double summation of the power series.
inline long double hyp1f1_series(long double a, long double z, int max_terms = 20000) {
  long double term = 1.0L, sum = 1.0L;
  for (int k = 0; k < max_terms; ++k) {
    term *= (a + k) / (1.5L + k) * z / (k + 1);
    sum += term;
    if (k > 10 && std::fabs(term) < 1e-21L * std::fabs(sum)) break;
  }
  return sum;
}

/// Nested tanh-sinh quadrature of the (r, R) integral defining c_const.
inline double c_const_quadrature(double alpha, double a, double b, double c) {
  boost::math::quadrature::tanh_sinh<double> ts;
  auto inner = [&](double R) {
    auto fr = [&](double r) { return std::pow(r * (1.0 - r), alpha) * std::pow(r, c); };
    return ts.integrate(fr, 0.0, 1.0, 1e-13) * std::pow(1.0 - R, 2.0 * alpha + 1.0 + a) * std::pow(R, 0.5 + b);
  };
  return ts.integrate(inner, 0.0, 1.0, 1e-13);
}

// Coordinates of a collision state: v (3), v_* (3), I, I_*, r, R and a stereographic
// chart for sigma. Chart 0 projects from the south pole, chart 1 from the north pole.
using Coords = Eigen::Matrix<double, 12, 1>;

inline std::array<double, 2> chart_of(const polygas::Vec3& s, int chart) {
  const double d = chart == 0 ? 1.0 + s.z : 1.0 - s.z;
  return {s.x / d, s.y / d};
}

inline polygas::Vec3 from_chart(double a, double b, int chart) {
  const double q = a * a + b * b;
  const double z = (1.0 - q) / (1.0 + q);
  return {2.0 * a / (1.0 + q), 2.0 * b / (1.0 + q), chart == 0 ? z : -z};
}

/// Area density of the chart: d sigma = 4 / (1 + |s|^2)^2 ds.
inline double chart_density(double a, double b) {
  const double q = 1.0 + a * a + b * b;
  return 4.0 / (q * q);
}

inline int pick_chart(const polygas::Vec3& s) { return s.z >= 0.0 ? 0 : 1; }

inline Coords to_coords(const polygas::CollisionState& s, int chart) {
  Coords x;
  x << s.a.v.x, s.a.v.y, s.a.v.z, s.b.v.x, s.b.v.y, s.b.v.z, s.a.I, s.b.I, s.angles.r, s.angles.R, 0, 0;
  const auto c = chart_of(s.angles.sigma, chart);
  x(10) = c[0];
  x(11) = c[1];
  return x;
}

inline polygas::CollisionState from_coords(const Coords& x, int chart) {
  polygas::CollisionState s;
  s.a.v = {x(0), x(1), x(2)};
  s.b.v = {x(3), x(4), x(5)};
  s.a.I = x(6);
  s.b.I = x(7);
  s.angles.r = x(8);
  s.angles.R = x(9);
  s.angles.sigma = from_chart(x(10), x(11), chart);
  return s;
}

/// |det| of the collision map with respect to dv dv_* dI dI_* dr dR d sigma,
/// from a fourth-order central-difference Jacobian matrix in chart coordinates.
inline double fd_jacobian(const polygas::CollisionState& s, const polygas::SpeciesParams& sp) {
  const int cin = pick_chart(s.angles.sigma);
  const auto post = polygas::collide(s, sp);
  const int cout = pick_chart(post.angles.sigma);
  const Coords x0 = to_coords(s, cin);
  Eigen::Matrix<double, 12, 12> J;
  for (int j = 0; j < 12; ++j) {
    const double h = 1e-4 * std::max(1e-2, std::abs(x0(j)));
    auto eval = [&](double d) {
      Coords x = x0;
      x(j) += d;
      return to_coords(polygas::collide(from_coords(x, cin), sp), cout);
    };
    J.col(j) = (8.0 * (eval(h) - eval(-h)) - (eval(2 * h) - eval(-2 * h))) / (12.0 * h);
  }
  const Coords y0 = to_coords(post, cout);
  return std::abs(J.determinant()) * chart_density(y0(10), y0(11)) / chart_density(x0(10), x0(11));
}

}  // namespace oracle
