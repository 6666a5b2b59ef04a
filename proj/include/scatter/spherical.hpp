#pragma once

#include <complex>
#include <functional>
#include <span>

#include "scatter/vec3.hpp"

namespace scatter {

// Partial-wave amplitude f(theta) = (1/2ik) sum_l (2l+1)(S_l - 1) P_l(cos theta).
// Sets *unitary to false (when given) if any |S_l| exceeds 1 beyond roundoff.
std::complex<double> partial_wave_amplitude(std::span<const std::complex<double>> S, double k,
                                            double theta, bool* unitary = nullptr);

// Plane-wave decomposition of the outgoing spherical wave restricted to the
// forward hemisphere, evaluated on the observation axis at distance r:
//   (ik/2pi) Int_{p_z > 0} exp(i k_Omega . r zhat) dOmega.
// Equals (e^{ikr} - 1)/r analytically; the discarded evanescent components
// account for the difference from e^{ikr}/r.
std::complex<double> hemisphere_decomposition(double k, double r, int quadrature_order);

// Exact modulus 1/r of the evanescent integral dropped from the
// decomposition at the on-axis observation point.
double evanescent_tail_bound(double r);

struct NonstationaryProbability {
    std::complex<double> amplitude;  // F' = i b k / (2 pi)
    double total;                    // 4 pi |b k / 2 pi|^2 = 4 pi |b/lambda|^2
};

// Dimensionless plane-wave scattering probability of the long-time
// asymptotic wave for a fixed center.
NonstationaryProbability nonstationary_probability(std::complex<double> b, double k);

// Semi-integral flux cross section Int_{2pi(n)} |b(k_Omega)|^2 dOmega over the
// hemisphere around n.  The per-direction density |b(k_Omega)|^2 read off
// from this integral is not unique: any angular pattern integrating to zero
// over the hemisphere could be added without changing the flux.
double semi_integral_cross_section(const std::function<std::complex<double>(const Vec3&)>& b_of_direction,
                                   const Vec3& n, int quadrature_order);

}  // namespace scatter
