#include "scatter/twobody.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "scatter/error.hpp"
#include "scatter/numerics/finite_difference.hpp"

namespace scatter {

namespace {

constexpr std::complex<double> kImagUnit{0.0, 1.0};

std::complex<double> incident_waves(const CollisionConfig& cfg, const Vec3& rn, const Vec3& ra,
                                    double t) {
    const double phase = cfg.ki.dot(rn) + cfg.pi.dot(ra) - cfg.total_energy() * t;
    return std::exp(kImagUnit * phase);
}

}  // namespace

std::complex<double> scattered_wave_closed(const CollisionConfig& cfg, const Vec3& rn,
                                           const Vec3& ra, double t) {
    const Vec3 rel = rn - ra;
    const double separation = rel.norm();
    if (!(separation > 0.0))
        throw SingularityError("scattered_wave_closed: coincidence point r_n = r_a");
    const double one_mu = 1.0 + cfg.mu;
    const double q = cfg.relative_speed();
    const double phase =
        (q * separation + cfg.total_momentum().dot(cfg.mu * rn + ra)) / one_mu -
        cfg.total_energy() * t;
    return cfg.b / one_mu / separation * std::exp(kImagUnit * phase);
}

FinalAmplitudeKernel final_amplitude_kernel(const CollisionConfig& cfg, const Vec3& kf,
                                            const Vec3& pf) {
    FinalAmplitudeKernel kernel;
    kernel.coefficient = kImagUnit * cfg.b / std::numbers::pi;
    kernel.momentum_residual = cfg.ki + cfg.pi - kf - pf;
    kernel.energy_residual =
        kf.norm2() + cfg.mu * pf.norm2() - cfg.ki.norm2() - cfg.mu * cfg.pi.norm2();
    return kernel;
}

double pde_residual(const CollisionConfig& cfg, double grid_spacing,
                    std::span<const std::pair<Vec3, Vec3>> probe_points, double t) {
    if (!(grid_spacing > 0.0)) throw PreconditionError("pde_residual: spacing must be positive");

    std::vector<std::vector<double>> points;
    points.reserve(probe_points.size());
    for (const auto& [rn, ra] : probe_points) {
        if ((rn - ra).norm() < 4.0 * grid_spacing)
            throw PreconditionError("pde_residual: probe within 4 spacings of r_n = r_a");
        points.push_back({rn.x, rn.y, rn.z, ra.x, ra.y, ra.z});
    }

    const auto psi = [&cfg](std::span<const double> x, double time) {
        const Vec3 rn{x[0], x[1], x[2]};
        const Vec3 ra{x[3], x[4], x[5]};
        return incident_waves(cfg, rn, ra, time) + scattered_wave_closed(cfg, rn, ra, time);
    };
    const double coeffs[2] = {0.5, 0.5 * cfg.mu};
    return numerics::schrodinger_residual_max(psi, coeffs, grid_spacing, points, t);
}

}  // namespace scatter
