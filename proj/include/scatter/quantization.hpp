#pragma once

#include <complex>
#include <vector>

#include "scatter/kinematics.hpp"

namespace scatter {

enum class Frame { CM, LF };

// One discrete amplitude quantum: direction, the solid angle it covers and
// the complex amplitude element dF = F' dOmega it carries.
struct AmplitudeElement {
    Vec3 direction;
    double d_omega = 0.0;
    std::complex<double> d_f{0.0};
    bool degenerate = false;  // set when frame transport hit a degenerate map
};

struct QuantizedSphere {
    std::vector<AmplitudeElement> elements;
    Frame frame = Frame::CM;
    CollisionConfig config;
};

// Zonal equal-area partition of the unit sphere into N cells: each cell has
// solid angle exactly 4 pi / N.
std::vector<AmplitudeElement> equal_area_partition(int N);

// Equal-amplitude quantization in the CM frame: every element carries
// dF = F'_c 4 pi / N with the constant CM amplitude F'_c, so equal areas are
// equal amplitude elements by construction.  Requires N >= 8.
QuantizedSphere quantize_cm(const CollisionConfig& cfg, int N);

// Galilean transport to the laboratory frame: directions map through the
// CM -> LF change of variables, the amplitude elements ride along unchanged,
// and each cell's solid angle is rescaled by the analytic direction-map
// jacobian.  Element count is preserved.
QuantizedSphere transport_to_lf(const QuantizedSphere& qs);

// Sum of |dF|^2 over elements inside the cone of the given half angle.
double window_probability(const QuantizedSphere& qs, const Vec3& axis, double half_angle);

struct SquareOrderCheck {
    double before = 0.0;  // squared in CM, membership taken after transport
    double after = 0.0;   // transported first, squared in LF
};

// Squaring the amplitude elements before or after the frame transport gives
// the same window probability; both routes are computed literally.
SquareOrderCheck square_order_invariance(const CollisionConfig& cfg, int N, const Vec3& axis,
                                         double half_angle);

// Angular quantum dOmega = (2 pi (1+mu))^2 / (q^2 A) for front area A.
double angular_quantum(double A, double q, double mu);

// Quantized differential cross section |F'_c|^2 A dOmega with dOmega from
// angular_quantum; equals |b|^2/(1+mu)^2 identically.
double quantized_cross_section_density(const CollisionConfig& cfg, double A);

}  // namespace scatter
