#include "scatter/lfpath.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "scatter/error.hpp"
#include "scatter/numerics/quadrature.hpp"

namespace scatter {

namespace {

constexpr std::complex<double> kImagUnit{0.0, 1.0};

[[noreturn]] void throw_singular(const Vec3& n, double disc) {
    std::ostringstream msg;
    msg << "lfpath: vanishing discriminant (" << disc << ") at direction (" << n.x << ", " << n.y
        << ", " << n.z << "); the angular density is unbounded there";
    throw SingularityError(msg.str());
}

}  // namespace

std::vector<std::complex<double>> lf_amplitude_density(const CollisionConfig& cfg, const Vec3& n) {
    const auto branches = final_momentum_roots(cfg, n);
    std::vector<std::complex<double>> amplitudes;
    amplitudes.reserve(branches.size());
    for (const auto& branch : branches) {
        if (!std::isfinite(branch.jacobian)) throw_singular(n, branch.discriminant);
        amplitudes.push_back(kImagUnit * cfg.b / (2.0 * std::numbers::pi) * branch.k_f * branch.k_f /
                             std::sqrt(branch.discriminant));
    }
    return amplitudes;
}

double lf_probability_density(const CollisionConfig& cfg, const Vec3& n) {
    const auto branches = final_momentum_roots(cfg, n);
    const double b2 = std::norm(cfg.b) / (4.0 * std::numbers::pi * std::numbers::pi);
    double density = 0.0;
    for (const auto& branch : branches) {
        if (!std::isfinite(branch.jacobian)) throw_singular(n, branch.discriminant);
        const double kf2 = branch.k_f * branch.k_f;
        density += b2 * kf2 * kf2 / branch.discriminant;
    }
    return density;
}

double lf_total_probability(const CollisionConfig& cfg, int quadrature_order) {
    if (quadrature_order < 8) throw PreconditionError("lf_total_probability: order must be >= 8");
    const auto quad = numerics::sphere_quadrature(quadrature_order);
    const double q2 = cfg.relative_momentum().norm2();

    std::vector<double> terms(quad.size());
    for (std::size_t i = 0; i < quad.size(); ++i) {
        const double disc = root_discriminant(cfg, quad.directions[i]);
        if (disc >= 0.0 && disc < 1e-10 * q2) throw_singular(quad.directions[i], disc);
        terms[i] = quad.weights[i] * lf_probability_density(cfg, quad.directions[i]);
    }
    return numerics::pairwise_sum(terms);
}

DivergenceProbe divergence_probe(const Vec3& ki, double mu) {
    if (!(mu > 0.0) || !(mu < 1.0))
        throw NotFoundError("divergence_probe: singular pairs with k_f > 0 exist only for 0 < mu < 1");
    if (!(ki.norm() > 0.0)) throw PreconditionError("divergence_probe: |k_i| must be positive");

    // p_i = alpha k_i with alpha = (1-mu)/mu gives q = mu k and mu P = k, so
    // the cone n.P = sqrt(P^2 - q^2/mu^2) carries a vanishing discriminant
    // with k_f = k sqrt((1-mu)/(1+mu)) on it.
    const double alpha = (1.0 - mu) / mu;
    const Vec3 khat = ki.normalized();
    Vec3 u, v;
    orthonormal_frame(khat, u, v);

    DivergenceProbe probe;
    probe.pi = alpha * ki;
    const double cos_chi = std::sqrt(1.0 - mu * mu);
    probe.n = cos_chi * khat + mu * u;

    CollisionConfig cfg{ki, probe.pi, mu, 0.0};
    probe.discriminant = root_discriminant(cfg, probe.n);
    probe.k_f = mu * cfg.total_momentum().dot(probe.n) / (1.0 + mu);
    return probe;
}

}  // namespace scatter
