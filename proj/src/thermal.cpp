#include "scatter/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "scatter/error.hpp"
#include "scatter/numerics/quadrature.hpp"

namespace scatter {

namespace {

constexpr double kPi = std::numbers::pi;

struct FinalState {
    double kf;
    double u;        // cos(theta) against k_i
    double kappa;
    double omega;
    double recoil;   // E_R
};

// Integrates kernel(state) * k_f^2 over d^3k_f with the kappa cap applied at
// three shrinking radii and Richardson extrapolation of the cap to zero.
double integrate_final_momenta(double ki, const GasSpec& gas, const GasQuadrature& grid,
                               const std::function<double(const FinalState&)>& kernel) {
    if (!(ki > 0.0)) throw PreconditionError("gas quadrature: k_i must be positive");
    if (!(gas.T > 0.0) || !(gas.mu > 0.0))
        throw PreconditionError("gas quadrature: T and mu must be positive");

    const double mu = gas.mu;
    const double T = gas.T;
    const double cap0 = grid.kappa_cap > 0.0 ? grid.kappa_cap : 1e-3 * ki;
    const double caps[3] = {cap0, 0.5 * cap0, 0.25 * cap0};
    // Beyond this the Gaussian weight is below e^{-60} for every direction.
    const double kmax = 2.0 * ki + 48.0 * std::sqrt(mu * T);

    // For mu > 1 the zero-recoil ridge lives only inside the forward cone
    // u > u_c = sqrt(1 - 1/mu^2).  The merged roots leave a 1/sqrt endpoint
    // singularity of the angular profile just inside the edge (absorbed with
    // u = u_c + (1 - u_c) v^2) and a thin near-tangency layer just outside
    // (given its own panel).
    numerics::GaussLegendre angular;
    if (mu > 1.0) {
        const double u_cone = std::sqrt(1.0 - 1.0 / (mu * mu));
        const double kt = mu * ki * u_cone / (1.0 + mu);
        const double kap2_t = ki * ki + kt * kt - 2.0 * ki * kt * u_cone;
        const double sigma_t = std::sqrt(std::max(2.0 * mu * kap2_t * T, 1e-300));
        const double layer = std::min(12.0 * sigma_t * (1.0 + mu) / (mu * mu * ki * ki * u_cone),
                                      0.5 * (u_cone + 1.0));
        angular = numerics::gauss_legendre(grid.angular_order, -1.0, u_cone - layer);
        const auto near = numerics::gauss_legendre(grid.angular_order, u_cone - layer, u_cone);
        angular.nodes.insert(angular.nodes.end(), near.nodes.begin(), near.nodes.end());
        angular.weights.insert(angular.weights.end(), near.weights.begin(), near.weights.end());
        const auto inside = numerics::gauss_legendre(grid.angular_order, 0.0, 1.0);
        for (int j = 0; j < grid.angular_order; ++j) {
            const double v = inside.nodes[j];
            angular.nodes.push_back(u_cone + (1.0 - u_cone) * v * v);
            angular.weights.push_back(2.0 * (1.0 - u_cone) * v * inside.weights[j]);
        }
    } else {
        angular = numerics::gauss_legendre(grid.angular_order, -1.0, 1.0);
    }

    std::vector<double> sums[3];
    for (auto& s : sums) s.reserve(angular.nodes.size());

    std::vector<double> edges;
    for (std::size_t ia = 0; ia < angular.nodes.size(); ++ia) {
        const double u = angular.nodes[ia];
        const double wu = angular.weights[ia];

        // Zero-recoil ridges along this direction and their thermal widths;
        // heavy neutrons (mu > 1) have a second, slower branch.  Directions
        // without a root still host a near-tangent Gaussian bump around the
        // slope-free point, so that gets a panel of its own.
        edges.assign({0.0, kmax});
        const auto add_panel = [&](double center, double sigma_g, double slope) {
            // When the slope vanishes the support is set by g'' = 1 + mu.
            const double width = std::min(12.0 * sigma_g / std::max(slope, 1e-300),
                                          std::sqrt(24.0 * sigma_g / (1.0 + mu)));
            edges.push_back(std::clamp(center - width, 0.0, kmax));
            edges.push_back(std::clamp(center + width, 0.0, kmax));
        };
        const auto sigma_at = [&](double kf) {
            const double kap2 = ki * ki + kf * kf - 2.0 * ki * kf * u;
            return std::sqrt(std::max(2.0 * mu * kap2 * T, 1e-300));
        };
        const double disc = 1.0 - mu * mu * (1.0 - u * u);
        if (disc > 0.0) {
            for (const double sign : {+1.0, -1.0}) {
                const double kstar = ki * (mu * u + sign * std::sqrt(disc)) / (1.0 + mu);
                if (!(kstar > 0.0) || !(kstar < kmax)) continue;
                add_panel(kstar, sigma_at(kstar),
                          std::abs((1.0 + mu) * kstar - mu * ki * u));
            }
        }
        const double tangent = mu * ki * u / (1.0 + mu);  // radial slope of g vanishes here
        if (tangent > 0.0 && tangent < kmax) add_panel(tangent, sigma_at(tangent), 0.0);
        std::sort(edges.begin(), edges.end());

        double partial[3] = {0.0, 0.0, 0.0};
        for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
            if (!(edges[p + 1] > edges[p])) continue;
            const auto radial = numerics::gauss_legendre(grid.radial_nodes, edges[p], edges[p + 1]);
            for (int ir = 0; ir < grid.radial_nodes; ++ir) {
                const double kf = radial.nodes[ir];
                const double kappa2 = ki * ki + kf * kf - 2.0 * ki * kf * u;
                const double kappa = std::sqrt(std::max(kappa2, 0.0));
                if (kappa < caps[2]) continue;
                FinalState state{kf, u, kappa, 0.5 * (ki * ki - kf * kf), 0.5 * mu * kappa2};
                const double contrib = radial.weights[ir] * kf * kf * kernel(state);
                for (int c = 0; c < 3; ++c)
                    if (kappa >= caps[c]) partial[c] += contrib;
            }
        }
        for (int c = 0; c < 3; ++c) sums[c].push_back(2.0 * kPi * wu * partial[c]);
    }

    double I[3];
    for (int c = 0; c < 3; ++c) I[c] = numerics::pairwise_sum(sums[c]);

    // Cap bias scales as cap^2; one Richardson step on each adjacent pair.
    const double r12 = I[1] + (I[1] - I[0]) / 3.0;
    const double r23 = I[2] + (I[2] - I[1]) / 3.0;
    const double value = r23 + (r23 - r12) / 15.0;
    const double scale = std::abs(value);
    if (scale > 0.0 && std::abs(r23 - r12) > 0.02 * scale)
        throw AccuracyError("gas quadrature: kappa-cap extrapolation did not converge");
    return value;
}

}  // namespace

double maxwell_pdf(const Vec3& p, double T, double mu) {
    if (!(T > 0.0) || !(mu > 0.0)) throw PreconditionError("maxwell_pdf: T and mu must be positive");
    const double a = mu / (2.0 * kPi * T);
    return a * std::sqrt(a) * std::exp(-mu * p.norm2() / (2.0 * T));
}

Vec3 maxwell_sample(double T, double mu, numerics::SeededStream& stream) {
    if (!(T > 0.0) || !(mu > 0.0))
        throw PreconditionError("maxwell_sample: T and mu must be positive");
    return stream.normal3(std::sqrt(T / mu));
}

double front_area(const CollisionConfig& cfg) {
    const double q = cfg.relative_speed();
    if (!(q > 0.0)) throw SingularityError("front_area: q = 0, no relative motion");
    const double root = 2.0 * kPi * (1.0 + cfg.mu) / q;
    return root * root;
}

double gas_double_differential(double ki, const Vec3& kf, const GasSpec& gas) {
    if (!(ki > 0.0)) throw PreconditionError("gas_double_differential: k_i must be positive");
    if (!(gas.T > 0.0) || !(gas.mu > 0.0))
        throw PreconditionError("gas_double_differential: T and mu must be positive");
    const Vec3 kappa_vec = Vec3{0.0, 0.0, ki} - kf;
    const double kappa = kappa_vec.norm();
    if (!(kappa > 0.0))
        throw SingularityError("gas_double_differential: kappa = 0, forward line is undefined");
    const double omega = 0.5 * (ki * ki - kf.norm2());
    const double recoil = 0.5 * gas.mu * kappa * kappa;
    const double gap = recoil - omega;
    return std::norm(gas.b) / (ki * kappa * std::sqrt(2.0 * kPi * gas.mu * gas.T)) *
           std::exp(-gap * gap / (4.0 * recoil * gas.T));
}

double gas_total_cross_section(double ki, const GasSpec& gas, const GasQuadrature& grid) {
    const double norm_b = std::norm(gas.b);
    const double pref = 1.0 / (ki * std::sqrt(2.0 * kPi * gas.mu * gas.T));
    return integrate_final_momenta(ki, gas, grid, [&](const FinalState& f) {
        const double gap = f.recoil - f.omega;
        return norm_b * pref / f.kappa * std::exp(-gap * gap / (4.0 * f.recoil * gas.T));
    });
}

double gas_total_constant_area(double ki, const GasSpec& gas, double A_const,
                               const GasQuadrature& grid) {
    if (!(A_const > 0.0)) throw PreconditionError("gas_total_constant_area: area must be positive");
    const double mu = gas.mu;
    const double one_mu = 1.0 + mu;
    const double pref = A_const * std::norm(gas.b) /
                        (4.0 * kPi * kPi * one_mu * one_mu * ki * std::sqrt(2.0 * kPi * mu * gas.T));
    // Maxwell average of q^2 on the delta plane: the parallel component is
    // pinned at p* = (omega - E_R)/(mu kappa), the transverse ones contribute
    // 2 mu T.
    return integrate_final_momenta(ki, gas, grid, [&](const FinalState& f) {
        const double gap = f.recoil - f.omega;
        const double p_star = -gap / (mu * f.kappa);
        const double ki_dot_khat = ki * (ki - f.kf * f.u) / f.kappa;
        const double q_par2 =
            ki * ki - 2.0 * mu * p_star * ki_dot_khat + mu * mu * p_star * p_star;
        return pref * (q_par2 + 2.0 * mu * gas.T) / f.kappa *
               std::exp(-gap * gap / (4.0 * f.recoil * gas.T));
    });
}

double calibrated_constant_area(double ki, const GasSpec& gas, int samples, std::uint64_t seed) {
    numerics::SeededStream stream(seed, 71);
    double sum_q = 0.0, sum_q3 = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Vec3 p = maxwell_sample(gas.T, gas.mu, stream);
        const double q = (Vec3{0.0, 0.0, ki} - gas.mu * p).norm();
        sum_q += q;
        sum_q3 += q * q * q;
    }
    const double q_bar2 = sum_q3 / sum_q;
    const double root = 2.0 * kPi * (1.0 + gas.mu);
    return root * root / q_bar2;
}

double rest_total_cross_section(double mu, std::complex<double> b) {
    if (mu < 0.0) throw PreconditionError("rest_total_cross_section: mu must be >= 0");
    const double ratio = std::abs(b) / (1.0 + mu);
    return 4.0 * kPi * ratio * ratio;
}

double q_factor(double mu) {
    if (mu < 0.0 || mu > 1.0) throw DomainError("q_factor: defined for 0 <= mu <= 1");
    if (mu == 0.0) return 1.0;
    if (mu == 1.0) return 8.0 / 3.0;
    const double c2 = 1.0 - mu * mu;
    return (8.0 / 3.0) * mu * mu + c2 * std::sqrt(c2) / mu * std::atan(mu / std::sqrt(c2));
}

double collision_rate(const CollisionConfig& cfg, double N0, double sigma) {
    if (N0 < 0.0 || sigma < 0.0) throw PreconditionError("collision_rate: N0 and sigma must be >= 0");
    return cfg.relative_speed() * N0 * sigma;
}

SampleScattering sample_scattering_probability(double ki, double d, const GasSpec& gas,
                                               int samples, numerics::SeededStream& stream) {
    if (!(d > 0.0)) throw PreconditionError("sample_scattering_probability: d must be positive");
    if (samples < 2) throw PreconditionError("sample_scattering_probability: need >= 2 samples");

    const double one_mu = 1.0 + gas.mu;
    const double w_pref = std::norm(gas.b) / (4.0 * kPi * kPi * one_mu * one_mu * one_mu * one_mu);
    std::vector<double> values(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const Vec3 p = maxwell_sample(gas.T, gas.mu, stream);
        const double q = (Vec3{0.0, 0.0, ki} - gas.mu * p).norm();
        const double area_root = 2.0 * kPi * one_mu / q;
        const double w_tot = 4.0 * kPi * w_pref * q * q;  // integrated LF probability via CM
        values[static_cast<std::size_t>(i)] = q * (area_root * area_root) * w_tot;
    }
    const double mean = numerics::pairwise_sum(values) / samples;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - mean) * (values[i] - mean);
    const double var = numerics::pairwise_sum(sq) / (samples - 1.0);
    const double mean_err = std::sqrt(var / samples);

    SampleScattering result;
    result.sigma = mean / ki;                 // equals W/(N0 d) whenever N0 > 0
    result.W = gas.N0 * d * result.sigma;
    result.sigma_stderr = mean_err / ki;
    if (result.sigma > 0.0 && result.sigma_stderr > 0.05 * result.sigma)
        throw AccuracyError("sample_scattering_probability: Monte Carlo did not converge");
    return result;
}

}  // namespace scatter
