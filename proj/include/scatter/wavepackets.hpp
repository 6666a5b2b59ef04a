#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "scatter/vec3.hpp"

namespace scatter {

enum class PacketFamily {
    gaussian,        // normalized, spreading
    dB_singular,     // normalized, non-spreading, singular at the moving center
    dB_nonsingular,  // non-normalizable j0 profile
};

// One free-particle packet: family, width parameter s (inverse length) and
// group momentum k (equal to the velocity in these units).
struct PacketSpec {
    PacketFamily family = PacketFamily::gaussian;
    double s = 1.0;
    Vec3 k;
};

// Closed-form packet value at (r, t).  Fourier convention throughout:
// psi(r, t) = Int a(p) exp(i p.r - i omega(p) t) d^3p with no 2 pi prefactor,
// so Plancherel reads Int |psi|^2 d^3r = (2 pi)^3 Int |a|^2 d^3p.
std::complex<double> packet_value(const PacketSpec& spec, const Vec3& r, double t);

// Carrier frequency omega(k, s): k^2/2 (gaussian), (k^2 - s^2)/2 (singular),
// (k^2 + s^2)/2 (nonsingular).
double carrier_frequency(const PacketSpec& spec);

// Plane-wave dispersion omega(p) of the component at momentum p.
double packet_dispersion(const PacketSpec& spec, const Vec3& p);

struct FourierComponent {
    bool shell = false;      // the nonsingular family is a measure on |p-k| = s
    double amplitude = 0.0;  // spectral density a(p) for the other families
    double omega = 0.0;      // dispersion at p
};

FourierComponent packet_fourier(const PacketSpec& spec, const Vec3& p);

// Integral of a test function against the nonsingular family's shell measure
// delta((k-p)^2 - s^2) d^3p, i.e. (s/2) Int f(k + s u) dOmega_u.
double shell_integrate(const PacketSpec& spec, const std::function<double(const Vec3&)>& f,
                       int quadrature_order = 32);

struct PacketNorm {
    bool finite = true;
    double value = 0.0;
};

// Numeric Int |psi|^2 d^3r by radial quadrature in the co-moving frame;
// infinite flag for the nonsingular family.
PacketNorm packet_norm(const PacketSpec& spec, double t, int radial_nodes = 256);

// Front area: closed forms pi (1 + t^2 s^4)/s^2 (gaussian) and pi/(3 s^2)
// (singular, t independent); the numeric companion evaluates the defining
// Int pi rho^2 |psi|^2 d^3r directly.
double front_area_closed(const PacketSpec& spec, double t);
double front_area_numeric(const PacketSpec& spec, double t, int radial_nodes = 512);

// Max |[i d/dt + Lap/2] psi| over probes by central differences.  Probes must
// keep 4 spacings away from the moving center for the singular family.
double schrodinger_residual(const PacketSpec& spec, double grid_spacing,
                            std::span<const Vec3> probes, double t);

// Spherical wave of (possibly imaginary) radial momentum q around a center
// moving with velocity k:
//   exp(i k.r - i k^2 t/2 - i q^2 t/2) exp(i q |r - k t|) / |r - k t|.
// At q = i s this is the singular packet divided by its normalization.
std::complex<double> genesis_transform(std::complex<double> q, const Vec3& k, const Vec3& r,
                                       double t);

// Probability deficit 1 - Int |R(p_z)|^2 |a|^2 (2 pi)^3 d^3p for reflection
// from a potential step of height u (mirror normal along z), with
//   R(p_z) = (p_z - sqrt(p_z^2 - u)) / (p_z + sqrt(p_z^2 - u)).
// The transverse momentum integral is carried out in closed form; only the
// normal-component marginal is integrated numerically.  Requires subcritical
// incidence k_z^2 < u.
double reflection_deficit(const PacketSpec& spec, double u, int quadrature_nodes = 2048);

// Sharp-spectrum fixed-center scattering of the packet displaced by the
// impact parameter rho (perpendicular to k): per-direction weights
// |F' exp(i k_Omega.(rho_Omega - rho))|^2 with F' = b|k|/(2 pi) and rho_Omega
// the impact parameter rotated along with the outgoing direction.  The
// translation phases have unit modulus, so the weights carry no rho
// dependence.
std::vector<double> scatter_fixed_center(const PacketSpec& spec, std::complex<double> b,
                                         const Vec3& rho, std::span<const Vec3> directions);

}  // namespace scatter
