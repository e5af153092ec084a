#pragma once

#include "polygas/species.hpp"
#include "polygas/vec3.hpp"

namespace polygas {

struct MicroState {
  Vec3 v;
  double I = 0.0;
};

struct CollisionAngles {
  double r = 0.5;
  double R = 0.5;
  Vec3 sigma{0.0, 0.0, 1.0};
};

struct CollisionState {
  MicroState a;
  MicroState b;
  CollisionAngles angles;
};

/// E = m/4 |v - v_*|^2 + I + I_*.
double total_energy(const CollisionState& s, const SpeciesParams& sp);

/// Borgnakke-Larsen map T. It is an involution: collide(collide(s)) == s.
/// Throws DegenerateCollision when E == 0 and DegenerateDirection when v == v_*.
CollisionState collide(const CollisionState& s, const SpeciesParams& sp);

/// (1 - R) sqrt(R) / ((1 - R') sqrt(R')) with R' = m|u|^2 / (4E).
double jacobian(const CollisionState& s, const SpeciesParams& sp);

/// Same Jacobian written through the relative speeds, (1 - R)|u'| / ((1 - R')|u|).
double jacobian_speed_form(const CollisionState& s, const SpeciesParams& sp);

/// I I_* r (1 - r) (1 - R)^2, preserved by collide.
double invariant_product(const CollisionState& s);

/// Model-3 cross section
///   b(u.sigma/|u|) (R^{g/2}|u|^g + (r(1-R)I/m)^{g/2} + ((1-r)(1-R)I_*/m)^{g/2}).
double cross_section_model3(const CollisionState& s, const SpeciesParams& sp, const InteractionParams& in);

/// Same without the angular factor b.
double cross_section_model3_radial(const CollisionState& s, const SpeciesParams& sp, double gamma);

/// phi_alpha(r) psi_alpha(R) (1 - R) sqrt(R).
double rR_weight(double r, double R, double alpha);

/// B phi_alpha(r) (1 - R) sqrt(R) psi_alpha(R) I^alpha I_*^alpha.
double measure_weight(const CollisionState& s, const SpeciesParams& sp, const InteractionParams& in);

/// Particle exchange (v <-> v_*, I <-> I_*, r -> 1 - r, sigma -> -sigma).
CollisionState exchange(const CollisionState& s);

/// Kinetic + internal energy of the pair in the lab frame.
double lab_energy(const CollisionState& s, const SpeciesParams& sp);

}  // namespace polygas
