#pragma once

#include <complex>
#include <span>
#include <utility>

#include "scatter/kinematics.hpp"

namespace scatter {

// Closed-form scattered part of the two-particle wave function:
//   (b/(1+mu)) exp{ i [q |r_n - r_a| + P.(mu r_n + r_a)] / (1+mu) - i E t } / |r_n - r_a|,
// a spherical wave in the relative coordinate riding on the center-of-mass
// plane wave.  E = E_ik + E_ip.
std::complex<double> scattered_wave_closed(const CollisionConfig& cfg, const Vec3& rn,
                                           const Vec3& ra, double t);

struct FinalAmplitudeKernel {
    std::complex<double> coefficient;  // i b / pi, momentum independent
    Vec3 momentum_residual;            // k_i + p_i - k_f - p_f
    double energy_residual;            // k_f^2 + mu p_f^2 - k_i^2 - mu p_i^2
};

// Distributional prefactor of the final-state amplitude with both
// conservation deltas reported as residuals instead of evaluated.
FinalAmplitudeKernel final_amplitude_kernel(const CollisionConfig& cfg, const Vec3& kf,
                                            const Vec3& pf);

// Max over probe points of |[i d/dt + Lap_n/2 + mu Lap_a/2] psi| for the
// incident plane waves plus the closed-form scattered wave, by central
// differences.  Probe points must stay at least 4 grid_spacing away from the
// coincidence point r_n = r_a.
double pde_residual(const CollisionConfig& cfg, double grid_spacing,
                    std::span<const std::pair<Vec3, Vec3>> probe_points, double t = 0.0);

}  // namespace scatter
