#pragma once

#include <complex>
#include <vector>

#include "scatter/vec3.hpp"

namespace scatter {

// Full kinematic state of one neutron-atom encounter.  Natural units
// throughout: hbar = m_neutron = 1, energy = k^2/2, k_B = 1; the scattering
// length b carries length units and cross sections come out in length^2.
struct CollisionConfig {
    Vec3 ki;                       // incident neutron momentum
    Vec3 pi;                       // initial atom momentum
    double mu = 0.0;               // mass ratio m/M (0 = fixed center)
    std::complex<double> b{0.0};   // s-wave scattering length

    Vec3 total_momentum() const { return ki + pi; }           // P
    Vec3 relative_momentum() const { return ki - mu * pi; }   // q vector
    double relative_speed() const { return relative_momentum().norm(); }
    double neutron_energy() const { return 0.5 * ki.norm2(); }
    double atom_energy() const { return 0.5 * mu * pi.norm2(); }
    double total_energy() const { return neutron_energy() + atom_energy(); }
};

// One admissible final-momentum magnitude for a given scattering direction,
// with the weight produced by integrating out the energy-conservation delta.
struct AngularBranch {
    double k_f = 0.0;           // final neutron momentum magnitude, > 0
    double jacobian = 0.0;      // k_f^2 / (2 |(1+mu) k_f - mu n.P|); +inf at a tangency
    double discriminant = 0.0;  // mu^2 (n.P)^2 - mu^2 P^2 + q^2
};

// Momentum/energy transfer bookkeeping for a (k_i -> k_f) pair.
struct TransferState {
    Vec3 kappa;                  // k_i - k_f
    double omega = 0.0;          // (k_i^2 - k_f^2)/2
    double recoil_energy = 0.0;  // E_R = mu kappa^2 / 2
    double s = 0.0;              // (k_i^2 + k_f^2)/2
};

struct OnShellCheck {
    bool momentum_ok = false;
    bool energy_ok = false;
};

// Discriminant of the final-momentum quadratic along direction n.
double root_discriminant(const CollisionConfig& cfg, const Vec3& n);

// All final-momentum magnitudes k_f > 0 compatible with momentum and energy
// conservation along the unit direction n, sorted descending.  Both signs of
// the quadratic are kept whenever positive; a discriminant within
// -1e-12 q^2 of zero is clamped to the tangent case, which is reported as a
// single branch with infinite jacobian.  Returns an empty list when no
// kinematically allowed branch exists.
std::vector<AngularBranch> final_momentum_roots(const CollisionConfig& cfg, const Vec3& n);

TransferState transfer_state(const Vec3& ki, const Vec3& kf, double mu);

// Conservation-law residual test: momentum within tol, energy (k^2 + mu p^2
// form) within tol.
OnShellCheck on_shell_check(const CollisionConfig& cfg, const Vec3& kf, const Vec3& pf, double tol);

}  // namespace scatter
