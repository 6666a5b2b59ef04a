#include "scatter/numerics/finite_difference.hpp"

#include <cmath>

#include "scatter/error.hpp"

namespace scatter::numerics {

std::complex<double> second_difference(const std::function<std::complex<double>(double)>& f,
                                       double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

double schrodinger_residual_max(const ComplexField& psi,
                                std::span<const double> laplacian_coeffs,
                                double spacing,
                                std::span<const std::vector<double>> points,
                                double t) {
    if (spacing <= 0.0) throw PreconditionError("schrodinger_residual_max: spacing must be positive");
    const std::size_t ncoord = 3 * laplacian_coeffs.size();
    const double h2 = spacing * spacing;
    const double dt = h2;

    double worst = 0.0;
    std::vector<double> x;
    for (const auto& point : points) {
        if (point.size() != ncoord)
            throw PreconditionError("schrodinger_residual_max: point dimension mismatch");
        x.assign(point.begin(), point.end());

        const std::complex<double> center = psi(x, t);
        const std::complex<double> dpsi_dt = (psi(x, t + dt) - psi(x, t - dt)) / (2.0 * dt);

        std::complex<double> residual = std::complex<double>(0.0, 1.0) * dpsi_dt;
        for (std::size_t g = 0; g < laplacian_coeffs.size(); ++g) {
            std::complex<double> lap = 0.0;
            for (std::size_t a = 3 * g; a < 3 * g + 3; ++a) {
                const double x0 = x[a];
                x[a] = x0 + spacing;
                lap += psi(x, t);
                x[a] = x0 - spacing;
                lap += psi(x, t);
                x[a] = x0;
                lap -= 2.0 * center;
            }
            residual += laplacian_coeffs[g] * lap / h2;
        }
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

}  // namespace scatter::numerics
