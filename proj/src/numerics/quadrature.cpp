#include "scatter/numerics/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "scatter/error.hpp"

namespace scatter::numerics {

namespace {

// Legendre P_n and its derivative at x by upward recurrence.
void legendre(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int l = 2; l <= n; ++l) {
        const double p2 = ((2 * l - 1) * x * p1 - (l - 1) * p0) / l;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw PreconditionError("gauss_legendre: n must be >= 1");
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
        return rule;
    }
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

GaussLegendre gauss_legendre(int n, double a, double b) {
    GaussLegendre rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = mid + hw * rule.nodes[i];
        rule.weights[i] *= hw;
    }
    return rule;
}

SphereQuadrature sphere_quadrature(int order) {
    if (order < 4) throw PreconditionError("sphere_quadrature: order must be >= 4");
    const GaussLegendre polar = gauss_legendre(order);
    const int m = 2 * order;
    const double dphi = 2.0 * std::numbers::pi / m;

    SphereQuadrature quad;
    quad.directions.reserve(static_cast<std::size_t>(order) * m);
    quad.weights.reserve(static_cast<std::size_t>(order) * m);
    for (int i = 0; i < order; ++i) {
        const double c = polar.nodes[i];
        const double st = std::sqrt(1.0 - c * c);
        const double w = polar.weights[i] * dphi;
        for (int j = 0; j < m; ++j) {
            const double phi = dphi * j;
            quad.directions.push_back({st * std::cos(phi), st * std::sin(phi), c});
            quad.weights.push_back(w);
        }
    }
    return quad;
}

SphereQuadrature hemisphere_quadrature(int order, const Vec3& axis) {
    if (order < 4) throw PreconditionError("hemisphere_quadrature: order must be >= 4");
    if (!is_unit(axis, 1e-10)) throw PreconditionError("hemisphere_quadrature: axis must be a unit vector");
    const GaussLegendre polar = gauss_legendre(order, 0.0, 1.0);
    const int m = 2 * order;
    const double dphi = 2.0 * std::numbers::pi / m;

    Vec3 u, v;
    orthonormal_frame(axis, u, v);

    SphereQuadrature quad;
    quad.directions.reserve(static_cast<std::size_t>(order) * m);
    quad.weights.reserve(static_cast<std::size_t>(order) * m);
    for (int i = 0; i < order; ++i) {
        const double c = polar.nodes[i];
        const double st = std::sqrt(1.0 - c * c);
        const double w = polar.weights[i] * dphi;
        for (int j = 0; j < m; ++j) {
            const double phi = dphi * j;
            quad.directions.push_back(c * axis + st * std::cos(phi) * u + st * std::sin(phi) * v);
            quad.weights.push_back(w);
        }
    }
    return quad;
}

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double acc = 0.0;
        for (double v : values) acc += v;
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace scatter::numerics
