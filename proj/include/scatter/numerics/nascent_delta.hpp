#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace scatter::numerics {

// Integrand for delta-constrained integrals: given the integration point x,
// fills `delta_args` (one entry per delta factor) and returns the smooth
// prefactor.
using DeltaIntegrand = std::function<double(std::span<const double> x, std::span<double> delta_args)>;

struct NascentDeltaResult {
    double value = 0.0;
    double extrapolation_error = 0.0;
};

// Integrates  smooth(x) * prod_j delta(arg_j(x))  over a rectangular domain by
// replacing each delta with the Gaussian surrogate (1/(eps*sqrt(pi))) exp(-arg^2/eps^2),
// evaluating a tensor Gauss-Legendre rule for every width in `epsilons`
// (strictly decreasing, at least 3 values) and Richardson-extrapolating the
// sequence in eps^2 to zero.
NascentDeltaResult nascent_delta_integrate(const DeltaIntegrand& integrand,
                                           int n_delta,
                                           std::span<const std::pair<double, double>> domain,
                                           std::span<const double> epsilons,
                                           int nodes_per_dim);

}  // namespace scatter::numerics
