#include "scatter/spherical.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "scatter/error.hpp"
#include "scatter/numerics/quadrature.hpp"

namespace scatter {

namespace {

constexpr std::complex<double> kImagUnit{0.0, 1.0};

std::complex<double> hemisphere_sum(double k, double r, int order) {
    // On-axis the azimuthal integral is trivial: 2 pi Int_0^1 e^{ikru} du.
    const auto rule = numerics::gauss_legendre(order, 0.0, 1.0);
    std::complex<double> acc = 0.0;
    for (int i = 0; i < order; ++i)
        acc += rule.weights[i] * std::exp(kImagUnit * (k * r * rule.nodes[i]));
    return kImagUnit * k * acc;
}

}  // namespace

std::complex<double> partial_wave_amplitude(std::span<const std::complex<double>> S, double k,
                                            double theta, bool* unitary) {
    if (!(k > 0.0)) throw PreconditionError("partial_wave_amplitude: k must be positive");
    if (unitary) *unitary = true;
    if (S.empty()) return 0.0;

    const double c = std::cos(theta);
    std::complex<double> sum = 0.0;
    double p0 = 1.0, p1 = c;
    for (std::size_t l = 0; l < S.size(); ++l) {
        if (std::abs(S[l]) > 1.0 + 1e-12 && unitary) *unitary = false;
        const double pl = l == 0 ? 1.0 : (l == 1 ? c : p1);
        sum += static_cast<double>(2 * l + 1) * (S[l] - 1.0) * pl;
        if (l >= 1) {
            const double next = ((2.0 * l + 1.0) * c * p1 - static_cast<double>(l) * p0) / (l + 1.0);
            p0 = p1;
            p1 = next;
        }
    }
    return sum / (2.0 * kImagUnit * k);
}

std::complex<double> hemisphere_decomposition(double k, double r, int quadrature_order) {
    if (!(k * r >= 1.0)) throw PreconditionError("hemisphere_decomposition: need k r >= 1");
    if (quadrature_order < 8)
        throw PreconditionError("hemisphere_decomposition: order must be >= 8");
    const std::complex<double> fine = hemisphere_sum(k, r, quadrature_order);
    const std::complex<double> coarse = hemisphere_sum(k, r, quadrature_order / 2);
    // The physically meaningful residual is O(1/r); demand quadrature noise
    // well below it.
    if (std::abs(fine - coarse) > 0.01 / r)
        throw AccuracyError("hemisphere_decomposition: quadrature not converged at this order");
    return fine;
}

double evanescent_tail_bound(double r) {
    if (!(r > 0.0)) throw PreconditionError("evanescent_tail_bound: r must be positive");
    return 1.0 / r;
}

NonstationaryProbability nonstationary_probability(std::complex<double> b, double k) {
    if (!(k > 0.0)) throw PreconditionError("nonstationary_probability: k must be positive");
    NonstationaryProbability result;
    result.amplitude = kImagUnit * b * k / (2.0 * std::numbers::pi);
    result.total = 4.0 * std::numbers::pi * std::norm(result.amplitude);
    return result;
}

double semi_integral_cross_section(
    const std::function<std::complex<double>(const Vec3&)>& b_of_direction, const Vec3& n,
    int quadrature_order) {
    const auto quad = numerics::hemisphere_quadrature(quadrature_order, n);
    std::vector<double> terms(quad.size());
    for (std::size_t i = 0; i < quad.size(); ++i)
        terms[i] = quad.weights[i] * std::norm(b_of_direction(quad.directions[i]));
    return numerics::pairwise_sum(terms);
}

}  // namespace scatter
