#pragma once

#include <span>
#include <vector>

#include "scatter/vec3.hpp"

namespace scatter::numerics {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

// Same rule mapped onto [a, b].
GaussLegendre gauss_legendre(int n, double a, double b);

// Product rule on the unit sphere: Gauss-Legendre in cos(theta) with `order`
// polar nodes, uniform trapezoid in phi with 2*order azimuthal nodes.
// Weights sum to 4*pi; polar integration is exact through degree 2*order-1.
struct SphereQuadrature {
    std::vector<Vec3> directions;
    std::vector<double> weights;

    std::size_t size() const { return directions.size(); }
};

SphereQuadrature sphere_quadrature(int order);

// Hemisphere (axis.dot(direction) > 0) variant of the product rule.
SphereQuadrature hemisphere_quadrature(int order, const Vec3& axis);

// Deterministic pairwise summation for reproducible parallel-style reductions.
double pairwise_sum(std::span<const double> values);

}  // namespace scatter::numerics
