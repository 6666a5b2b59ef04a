#pragma once

#include <complex>

#include "scatter/kinematics.hpp"

namespace scatter {

// Standard route through the center-of-mass frame.  The CM "scattering
// angle" is always represented by the unit vector of the CM momentum, never a
// scalar angle.

// F'_c = i b q / (2 pi (1+mu)^2), direction independent.
std::complex<double> cm_amplitude_density(const CollisionConfig& cfg);

// |F'_c|^2 per steradian of the CM direction; isotropic.
double cm_probability_density(const CollisionConfig& cfg);

struct LabImage {
    Vec3 n;          // laboratory-frame direction
    double k_f;      // final neutron momentum magnitude
};

// k_f vec = q omega_c / (1+mu) + mu P / (1+mu); returns its direction and
// magnitude.  The magnitude solves the final-momentum quadratic for the
// returned direction.
LabImage map_cm_to_lf(const CollisionConfig& cfg, const Vec3& omega_c);

// Inverse change of variables: omega_c = ((1+mu) k_f n - mu P) / q.
Vec3 map_lf_to_cm(const CollisionConfig& cfg, const Vec3& n, double k_f);

// Jacobian dOmega_f / dOmega_c of the direction map at omega_c.
double cm_to_lf_solid_angle_ratio(const CollisionConfig& cfg, const Vec3& omega_c);

// The CM probability pushed forward to the laboratory direction n, summed
// over kinematic branches:
//   sum |b/(2 pi (1+mu))|^2 k_f^2 q / sqrt(discriminant).
double backmapped_lf_density(const CollisionConfig& cfg, const Vec3& n);

// Front area times the back-mapped density; integrates to 4 pi |b/(1+mu)|^2
// for a target at rest.
double standard_cross_section_density(const CollisionConfig& cfg, const Vec3& n);

}  // namespace scatter
