#include "scatter/numerics/nascent_delta.hpp"

#include <cmath>
#include <numbers>

#include "scatter/error.hpp"
#include "scatter/numerics/quadrature.hpp"

namespace scatter::numerics {

namespace {

// Neville extrapolation of (t_i, v_i) to t = 0.
double extrapolate_to_zero(std::span<const double> t, std::span<const double> v) {
    std::vector<double> tab(v.begin(), v.end());
    const std::size_t n = tab.size();
    for (std::size_t m = 1; m < n; ++m) {
        for (std::size_t i = 0; i + m < n; ++i) {
            tab[i] = tab[i + 1] + (tab[i + 1] - tab[i]) * t[i + m] / (t[i] - t[i + m]);
        }
    }
    return tab[0];
}

}  // namespace

NascentDeltaResult nascent_delta_integrate(const DeltaIntegrand& integrand,
                                           int n_delta,
                                           std::span<const std::pair<double, double>> domain,
                                           std::span<const double> epsilons,
                                           int nodes_per_dim) {
    if (epsilons.size() < 3) throw PreconditionError("nascent_delta_integrate: need >= 3 widths");
    for (std::size_t i = 1; i < epsilons.size(); ++i) {
        if (!(epsilons[i] < epsilons[i - 1]))
            throw PreconditionError("nascent_delta_integrate: widths must decrease strictly");
    }
    if (n_delta < 1 || domain.empty() || nodes_per_dim < 2)
        throw PreconditionError("nascent_delta_integrate: bad integrand shape");

    const std::size_t dim = domain.size();
    std::vector<GaussLegendre> rules;
    rules.reserve(dim);
    for (const auto& [lo, hi] : domain) rules.push_back(gauss_legendre(nodes_per_dim, lo, hi));

    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    std::vector<double> x(dim), args(static_cast<std::size_t>(n_delta));
    std::vector<std::size_t> idx(dim, 0);

    std::vector<double> values(epsilons.size(), 0.0);
    // Odometer over the tensor grid; accumulate every width in one sweep.
    while (true) {
        double w = 1.0;
        for (std::size_t d = 0; d < dim; ++d) {
            x[d] = rules[d].nodes[idx[d]];
            w *= rules[d].weights[idx[d]];
        }
        const double smooth = integrand(x, args);
        if (smooth != 0.0) {
            for (std::size_t e = 0; e < epsilons.size(); ++e) {
                const double eps = epsilons[e];
                double surrogate = 1.0;
                for (int j = 0; j < n_delta; ++j) {
                    const double a = args[static_cast<std::size_t>(j)] / eps;
                    surrogate *= inv_sqrt_pi / eps * std::exp(-a * a);
                }
                values[e] += w * smooth * surrogate;
            }
        }
        std::size_t d = 0;
        while (d < dim && ++idx[d] == rules[d].nodes.size()) idx[d++] = 0;
        if (d == dim) break;
    }

    std::vector<double> t(epsilons.size());
    for (std::size_t e = 0; e < epsilons.size(); ++e) t[e] = epsilons[e] * epsilons[e];

    const std::size_t n = values.size();
    const double full = extrapolate_to_zero(t, values);
    const double drop_first =
        extrapolate_to_zero(std::span(t).subspan(1), std::span<const double>(values).subspan(1));
    const double prev = extrapolate_to_zero(std::span(t).first(n - 1),
                                            std::span<const double>(values).first(n - 1));

    NascentDeltaResult result;
    result.value = full;
    result.extrapolation_error = std::max(std::abs(full - prev), std::abs(full - drop_first));
    return result;
}

}  // namespace scatter::numerics
