#include "scatter/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "scatter/error.hpp"

namespace scatter {

namespace {

void require_unit(const Vec3& n, const char* who) {
    if (!is_unit(n)) throw PreconditionError(std::string(who) + ": direction must be a unit vector");
}

}  // namespace

double root_discriminant(const CollisionConfig& cfg, const Vec3& n) {
    const Vec3 P = cfg.total_momentum();
    const double pn = P.dot(n);
    const double q2 = cfg.relative_momentum().norm2();
    return cfg.mu * cfg.mu * (pn * pn - P.norm2()) + q2;
}

std::vector<AngularBranch> final_momentum_roots(const CollisionConfig& cfg, const Vec3& n) {
    require_unit(n, "final_momentum_roots");

    const Vec3 P = cfg.total_momentum();
    const double pn = P.dot(n);
    const double q2 = cfg.relative_momentum().norm2();
    const double one_mu = 1.0 + cfg.mu;
    const double cutoff = 1e-12 * cfg.ki.norm();

    double disc = root_discriminant(cfg, n);
    std::vector<AngularBranch> branches;
    if (disc < -1e-12 * q2) return branches;

    if (disc < 0.0) disc = 0.0;  // tangency clamp
    if (disc == 0.0) {
        const double kf = cfg.mu * pn / one_mu;
        if (kf > cutoff)
            branches.push_back({kf, std::numeric_limits<double>::infinity(), 0.0});
        return branches;
    }

    const double sq = std::sqrt(disc);
    for (const double sign : {+1.0, -1.0}) {
        const double kf = (cfg.mu * pn + sign * sq) / one_mu;
        if (kf <= cutoff) continue;
        const double denom = std::abs(one_mu * kf - cfg.mu * pn);
        branches.push_back({kf, kf * kf / (2.0 * denom), disc});
    }
    std::sort(branches.begin(), branches.end(),
              [](const AngularBranch& a, const AngularBranch& b) { return a.k_f > b.k_f; });
    return branches;
}

TransferState transfer_state(const Vec3& ki, const Vec3& kf, double mu) {
    TransferState state;
    state.kappa = ki - kf;
    state.omega = 0.5 * (ki.norm2() - kf.norm2());
    state.recoil_energy = 0.5 * mu * state.kappa.norm2();
    state.s = 0.5 * (ki.norm2() + kf.norm2());
    return state;
}

OnShellCheck on_shell_check(const CollisionConfig& cfg, const Vec3& kf, const Vec3& pf, double tol) {
    if (!(tol > 0.0)) throw PreconditionError("on_shell_check: tol must be positive");
    OnShellCheck check;
    check.momentum_ok = (cfg.ki + cfg.pi - kf - pf).norm() <= tol;
    const double energy_residual =
        kf.norm2() + cfg.mu * pf.norm2() - cfg.ki.norm2() - cfg.mu * cfg.pi.norm2();
    check.energy_ok = std::abs(energy_residual) <= tol;
    return check;
}

}  // namespace scatter
