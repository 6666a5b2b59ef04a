#include "scatter/numerics/fit.hpp"

#include <cmath>
#include <vector>

#include "scatter/error.hpp"

namespace scatter::numerics {

PowerLawFit powerlaw_fit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw PreconditionError("powerlaw_fit: length mismatch");
    const std::size_t n = xs.size();
    if (n < 4) throw PreconditionError("powerlaw_fit: need at least 4 points");

    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
            throw DomainError("powerlaw_fit: data must be strictly positive");
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(ys[i]);
    }

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) throw DomainError("powerlaw_fit: degenerate abscissa");

    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.log_amplitude = my - fit.exponent * mx;

    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ly[i] - fit.log_amplitude - fit.exponent * lx[i];
        rss += r * r;
    }
    fit.exponent_stderr = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
    return fit;
}

}  // namespace scatter::numerics
