#pragma once

#include <complex>
#include <vector>

#include "scatter/kinematics.hpp"

namespace scatter {

// Direct laboratory-frame route: the energy delta is integrated out along
// each scattering direction, so densities are per steradian of the final
// neutron direction, summed over kinematic branches.

// Scattering amplitude density per branch:
//   (i b / 2 pi) k_f^2 / sqrt(discriminant).
std::vector<std::complex<double>> lf_amplitude_density(const CollisionConfig& cfg, const Vec3& n);

// |amplitude|^2 summed over branches; zero when no branch exists.
double lf_probability_density(const CollisionConfig& cfg, const Vec3& n);

// Sphere quadrature of lf_probability_density; `quadrature_order` polar nodes
// (>= 8).  Throws SingularityError when the grid detects a vanishing
// discriminant, naming the offending direction; the integral genuinely
// diverges there.
double lf_total_probability(const CollisionConfig& cfg, int quadrature_order);

// A kinematic configuration on which the LF angular density blows up: the
// discriminant vanishes on a direction cone while the final momentum stays
// finite.  Such points make the Maxwellian average of the LF route diverge.
struct DivergenceProbe {
    Vec3 pi;             // atom momentum realizing the singular cone
    Vec3 n;              // direction on the cone
    double discriminant;
    double k_f;          // final momentum at the singular direction
};

// Deterministic construction: p_i = alpha k_i with alpha = (1-mu)/mu puts the
// singular cone at polar angle acos(sqrt(1-mu^2)) from k_i with k_f > 0 on it.
// Only mass ratios 0 < mu < 1 admit such a pair; otherwise NotFoundError.
DivergenceProbe divergence_probe(const Vec3& ki, double mu);

}  // namespace scatter
