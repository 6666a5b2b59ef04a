#pragma once

#include <complex>

#include "scatter/kinematics.hpp"
#include "scatter/numerics/random.hpp"

namespace scatter {

// Thermal target description.  Temperature in the same energy units as
// k^2/2 (k_B = 1).
struct GasSpec {
    double T = 1.0;               // temperature
    double mu = 1.0;              // mass ratio m/M
    double N0 = 0.0;              // atoms per volume
    std::complex<double> b{0.0};  // s-wave scattering length
};

// Quadrature controls for the final-momentum integrals.
struct GasQuadrature {
    int angular_order = 48;   // Gauss-Legendre nodes in cos(theta)
    int radial_nodes = 48;    // Gauss-Legendre nodes per radial panel
    double kappa_cap = -1.0;  // forward exclusion radius; <= 0 selects 1e-3 k_i
};

// Maxwellian momentum distribution (mu/2 pi T)^{3/2} exp(-mu p^2 / 2T).
double maxwell_pdf(const Vec3& p, double T, double mu);

// One Maxwellian momentum draw: three independent normal components with
// variance T/mu.  Deterministic for a fixed stream state.
Vec3 maxwell_sample(double T, double mu, numerics::SeededStream& stream);

// Front area A = (2 pi (1+mu))^2 / q^2 of the incident packet.
double front_area(const CollisionConfig& cfg);

// Double-differential gas cross section per d^3k_f, with k_i along +z:
//   |b|^2 / (k_i kappa sqrt(2 pi mu T)) exp(-(E_R - omega)^2 / (4 E_R T)).
// Undefined on the forward line kappa = 0.
double gas_double_differential(double ki, const Vec3& kf, const GasSpec& gas);

// Quadrature of gas_double_differential over all final momenta.  The radial
// grid refines around the zero-recoil ridge so the frozen-target limit stays
// accurate; the forward line is excluded by a kappa cap whose size is
// Richardson-extrapolated to zero.
double gas_total_cross_section(double ki, const GasSpec& gas, const GasQuadrature& grid = {});

// Same averaging chain with a fixed front area A_const replacing the
// q-dependent one; used for the temperature-scaling contrast.
double gas_total_constant_area(double ki, const GasSpec& gas, double A_const,
                               const GasQuadrature& grid = {});

// Constant front area that calibrates gas_total_constant_area to the dynamic
// result at this (k_i, T): A(q_bar) with q_bar^2 = <q^3>/<q>.
double calibrated_constant_area(double ki, const GasSpec& gas, int samples = 200000,
                                std::uint64_t seed = 0);

// Total cross section for a target at rest, 4 pi |b / (1+mu)|^2.
double rest_total_cross_section(double mu, std::complex<double> b);

// Ratio of the direct laboratory-frame total probability to the CM one for a
// target at rest:
//   Q(mu) = (8/3) mu^2 + ((1-mu^2)^{3/2}/mu) arctan(mu/sqrt(1-mu^2)),
// with Q(0) = 1 and Q(1) = 8/3 taken analytically.  Defined on [0, 1].
double q_factor(double mu);

// Collisions per unit time, nu = q N0 sigma.
double collision_rate(const CollisionConfig& cfg, double N0, double sigma);

struct SampleScattering {
    double W = 0.0;            // total scattering probability in the sample
    double sigma = 0.0;        // W / (N0 d)
    double sigma_stderr = 0.0; // Monte Carlo standard error of sigma
};

// Monte Carlo thin-sample scattering probability
//   W = N0 (d / k_i) < q A(q) w_tot(q) >_Maxwell,
// evaluated over `samples` Maxwellian draws from `stream`.
SampleScattering sample_scattering_probability(double ki, double d, const GasSpec& gas,
                                               int samples, numerics::SeededStream& stream);

}  // namespace scatter
