#include "polygas/microdynamics.hpp"

#include <cmath>
#include <numbers>

#include "polygas/errors.hpp"

namespace polygas {

double total_energy(const CollisionState& s, const SpeciesParams& sp) {
  return 0.25 * sp.m * norm2(s.a.v - s.b.v) + s.a.I + s.b.I;
}

double lab_energy(const CollisionState& s, const SpeciesParams& sp) {
  return 0.5 * sp.m * (norm2(s.a.v) + norm2(s.b.v)) + s.a.I + s.b.I;
}

CollisionState collide(const CollisionState& s, const SpeciesParams& sp) {
  const Vec3 u = s.a.v - s.b.v;
  const Vec3 V = 0.5 * (s.a.v + s.b.v);
  const double u2 = norm2(u);
  const double E = 0.25 * sp.m * u2 + s.a.I + s.b.I;
  if (!(E > 0.0)) fail(ErrorCode::DegenerateCollision, "collide: total energy is zero");
  const double un = std::sqrt(u2);
  if (!(un > 0.0)) fail(ErrorCode::DegenerateDirection, "collide: zero relative velocity");

  const auto& ang = s.angles;
  const double speed = std::sqrt(ang.R * E / sp.m);
  CollisionState out;
  out.a.v = V + speed * ang.sigma;
  out.b.v = V - speed * ang.sigma;
  out.a.I = ang.r * (1.0 - ang.R) * E;
  out.b.I = (1.0 - ang.r) * (1.0 - ang.R) * E;

  const double Iint = s.a.I + s.b.I;
  // r' is arbitrary when the pre-collision internal energy vanishes (R' = 1)
  out.angles.r = Iint > 0.0 ? s.a.I / Iint : 0.5;
  out.angles.R = 0.25 * sp.m * u2 / E;
  out.angles.sigma = (1.0 / un) * u;
  return out;
}

double jacobian(const CollisionState& s, const SpeciesParams& sp) {
  const double E = total_energy(s, sp);
  if (!(E > 0.0)) fail(ErrorCode::DegenerateCollision, "jacobian: total energy is zero");
  const double Rp = 0.25 * sp.m * norm2(s.a.v - s.b.v) / E;
  const double den = (1.0 - Rp) * std::sqrt(Rp);
  if (!(den > 0.0)) fail(ErrorCode::SingularConfiguration, "jacobian: R' is 0 or 1");
  const double R = s.angles.R;
  return (1.0 - R) * std::sqrt(R) / den;
}

double jacobian_speed_form(const CollisionState& s, const SpeciesParams& sp) {
  const double E = total_energy(s, sp);
  const double un = norm(s.a.v - s.b.v);
  if (!(un > 0.0)) fail(ErrorCode::SingularConfiguration, "jacobian: zero relative speed");
  const double Rp = 0.25 * sp.m * un * un / E;
  if (!(1.0 - Rp > 0.0)) fail(ErrorCode::SingularConfiguration, "jacobian: R' is 1");
  const double R = s.angles.R;
  const double un_post = 2.0 * std::sqrt(R * E / sp.m);
  return (1.0 - R) * un_post / ((1.0 - Rp) * un);
}

double invariant_product(const CollisionState& s) {
  const double r = s.angles.r, R = s.angles.R;
  return s.a.I * s.b.I * r * (1.0 - r) * (1.0 - R) * (1.0 - R);
}

double cross_section_model3_radial(const CollisionState& s, const SpeciesParams& sp, double gamma) {
  const double h = 0.5 * gamma;
  const double r = s.angles.r, R = s.angles.R;
  const double un = norm(s.a.v - s.b.v);
  return std::pow(R, h) * std::pow(un, gamma) + std::pow(r * (1.0 - R) * s.a.I / sp.m, h) +
         std::pow((1.0 - r) * (1.0 - R) * s.b.I / sp.m, h);
}

double cross_section_model3(const CollisionState& s, const SpeciesParams& sp, const InteractionParams& in) {
  double bval = in.b.K();
  if (!in.b.is_constant()) {
    const Vec3 u = s.a.v - s.b.v;
    const double un = norm(u);
    // direction undefined at u = 0; use the sphere average of b there
    bval = un > 0.0 ? in.b(dot(u, s.angles.sigma) / un) : in.b.norm() / (4.0 * std::numbers::pi);
  }
  return bval * cross_section_model3_radial(s, sp, in.gamma);
}

double rR_weight(double r, double R, double alpha) {
  return std::pow(r * (1.0 - r), alpha) * std::pow(1.0 - R, 2.0 * alpha + 1.0) * std::sqrt(R);
}

double measure_weight(const CollisionState& s, const SpeciesParams& sp, const InteractionParams& in) {
  const double a = sp.alpha;
  return cross_section_model3(s, sp, in) * rR_weight(s.angles.r, s.angles.R, a) * std::pow(s.a.I, a) *
         std::pow(s.b.I, a);
}

CollisionState exchange(const CollisionState& s) {
  CollisionState out;
  out.a = s.b;
  out.b = s.a;
  out.angles.r = 1.0 - s.angles.r;
  out.angles.R = s.angles.R;
  out.angles.sigma = -s.angles.sigma;
  return out;
}

}  // namespace polygas
