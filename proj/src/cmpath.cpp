#include "scatter/cmpath.hpp"

#include <cmath>
#include <numbers>

#include "scatter/error.hpp"

namespace scatter {

namespace {

constexpr std::complex<double> kImagUnit{0.0, 1.0};

double require_relative_motion(const CollisionConfig& cfg, const char* who) {
    const double q = cfg.relative_speed();
    if (!(q > 0.0)) throw SingularityError(std::string(who) + ": q = 0, no relative motion");
    return q;
}

}  // namespace

std::complex<double> cm_amplitude_density(const CollisionConfig& cfg) {
    const double q = require_relative_motion(cfg, "cm_amplitude_density");
    const double one_mu = 1.0 + cfg.mu;
    return kImagUnit * cfg.b * q / (2.0 * std::numbers::pi * one_mu * one_mu);
}

double cm_probability_density(const CollisionConfig& cfg) {
    return std::norm(cm_amplitude_density(cfg));
}

LabImage map_cm_to_lf(const CollisionConfig& cfg, const Vec3& omega_c) {
    if (!is_unit(omega_c)) throw PreconditionError("map_cm_to_lf: omega_c must be a unit vector");
    const double q = require_relative_motion(cfg, "map_cm_to_lf");
    const double one_mu = 1.0 + cfg.mu;
    const Vec3 kf_vec = (q / one_mu) * omega_c + (cfg.mu / one_mu) * cfg.total_momentum();
    const double kf = kf_vec.norm();
    if (!(kf > 1e-300)) throw SingularityError("map_cm_to_lf: zero-length final momentum");
    return {kf_vec / kf, kf};
}

Vec3 map_lf_to_cm(const CollisionConfig& cfg, const Vec3& n, double k_f) {
    const double q = require_relative_motion(cfg, "map_lf_to_cm");
    return ((1.0 + cfg.mu) * k_f * n - cfg.mu * cfg.total_momentum()) / q;
}

double cm_to_lf_solid_angle_ratio(const CollisionConfig& cfg, const Vec3& omega_c) {
    const double q = require_relative_motion(cfg, "cm_to_lf_solid_angle_ratio");
    const LabImage image = map_cm_to_lf(cfg, omega_c);
    const double disc = root_discriminant(cfg, image.n);
    if (!(disc > 0.0)) throw SingularityError("cm_to_lf_solid_angle_ratio: tangent direction");
    const double one_mu = 1.0 + cfg.mu;
    return q * std::sqrt(disc) / (image.k_f * image.k_f * one_mu * one_mu);
}

double backmapped_lf_density(const CollisionConfig& cfg, const Vec3& n) {
    if (!is_unit(n)) throw PreconditionError("backmapped_lf_density: n must be a unit vector");
    const double q = require_relative_motion(cfg, "backmapped_lf_density");
    const double one_mu = 1.0 + cfg.mu;
    const double prefactor =
        std::norm(cfg.b) / (4.0 * std::numbers::pi * std::numbers::pi * one_mu * one_mu);

    double density = 0.0;
    for (const auto& branch : final_momentum_roots(cfg, n)) {
        if (!std::isfinite(branch.jacobian))
            throw SingularityError("backmapped_lf_density: vanishing discriminant");
        density += prefactor * branch.k_f * branch.k_f * q / std::sqrt(branch.discriminant);
    }
    return density;
}

double standard_cross_section_density(const CollisionConfig& cfg, const Vec3& n) {
    const double q = require_relative_motion(cfg, "standard_cross_section_density");
    const double one_mu = 1.0 + cfg.mu;
    const double area = 2.0 * std::numbers::pi * one_mu / q;  // sqrt of front area
    return area * area * backmapped_lf_density(cfg, n);
}

}  // namespace scatter
