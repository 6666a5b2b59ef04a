#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace scatter::numerics {

// Complex scalar field over n spatial coordinates and time.
using ComplexField = std::function<std::complex<double>(std::span<const double> x, double t)>;

// Central second difference of f along one coordinate.
std::complex<double> second_difference(const std::function<std::complex<double>(double)>& f,
                                       double x, double h);

// Max over points of |i d/dt psi + sum_g c_g Laplacian_g psi| where group g
// spans coordinates [3g, 3g+3).  Laplacians use central second differences
// with step `spacing`; the time derivative is central with step spacing^2 so
// its truncation error stays below the spatial one.
double schrodinger_residual_max(const ComplexField& psi,
                                std::span<const double> laplacian_coeffs,
                                double spacing,
                                std::span<const std::vector<double>> points,
                                double t);

}  // namespace scatter::numerics
