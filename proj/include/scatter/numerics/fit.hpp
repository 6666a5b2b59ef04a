#pragma once

#include <span>

namespace scatter::numerics {

struct PowerLawFit {
    double exponent = 0.0;
    double exponent_stderr = 0.0;
    double log_amplitude = 0.0;
};

// Least-squares fit of y = c * x^a on log-log axes.  Requires >= 4 strictly
// positive points; the stderr is the usual OLS slope error.
PowerLawFit powerlaw_fit(std::span<const double> xs, std::span<const double> ys);

}  // namespace scatter::numerics
