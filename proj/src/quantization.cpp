#include "scatter/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "scatter/cmpath.hpp"
#include "scatter/error.hpp"

namespace scatter {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::vector<AmplitudeElement> equal_area_partition(int N) {
    if (N < 1) throw PreconditionError("equal_area_partition: N must be >= 1");

    // Aspect-balanced band count, then one cell row per band with exact
    // largest-remainder rounding so the counts sum to N.
    const int bands = std::max(1, static_cast<int>(std::lround(std::sqrt(N * kPi) / 2.0)));
    std::vector<double> ideal(static_cast<std::size_t>(bands));
    double total = 0.0;
    for (int b = 0; b < bands; ++b) {
        const double theta = kPi * (b + 0.5) / bands;
        ideal[static_cast<std::size_t>(b)] = std::sin(theta);
        total += ideal[static_cast<std::size_t>(b)];
    }
    std::vector<int> counts(static_cast<std::size_t>(bands), 0);
    int assigned = 0;
    std::vector<std::pair<double, int>> remainders;
    for (int b = 0; b < bands; ++b) {
        const double share = ideal[static_cast<std::size_t>(b)] / total * N;
        counts[static_cast<std::size_t>(b)] = static_cast<int>(std::floor(share));
        assigned += counts[static_cast<std::size_t>(b)];
        remainders.push_back({share - std::floor(share), b});
    }
    std::sort(remainders.begin(), remainders.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (int i = 0; i < N - assigned; ++i)
        ++counts[static_cast<std::size_t>(remainders[static_cast<std::size_t>(i)].second)];

    const double cell_area = 4.0 * kPi / N;
    std::vector<AmplitudeElement> cells;
    cells.reserve(static_cast<std::size_t>(N));
    double z_top = 1.0;
    for (int b = 0; b < bands; ++b) {
        const int nb = counts[static_cast<std::size_t>(b)];
        if (nb == 0) continue;
        const double dz = 2.0 * static_cast<double>(nb) / N;  // band height in cos(theta)
        const double z_mid = z_top - 0.5 * dz;
        const double st = std::sqrt(std::max(0.0, 1.0 - z_mid * z_mid));
        for (int j = 0; j < nb; ++j) {
            const double phi = 2.0 * kPi * (j + 0.5) / nb;
            AmplitudeElement cell;
            cell.direction = {st * std::cos(phi), st * std::sin(phi), z_mid};
            cell.d_omega = cell_area;
            cells.push_back(cell);
        }
        z_top -= dz;
    }
    return cells;
}

QuantizedSphere quantize_cm(const CollisionConfig& cfg, int N) {
    if (N < 8) throw PreconditionError("quantize_cm: need at least 8 elements");
    QuantizedSphere qs;
    qs.frame = Frame::CM;
    qs.config = cfg;
    qs.elements = equal_area_partition(N);
    const std::complex<double> f_c = cm_amplitude_density(cfg);
    for (auto& element : qs.elements) element.d_f = f_c * element.d_omega;
    return qs;
}

QuantizedSphere transport_to_lf(const QuantizedSphere& qs) {
    if (qs.frame != Frame::CM) throw PreconditionError("transport_to_lf: source must be CM");
    QuantizedSphere out;
    out.frame = Frame::LF;
    out.config = qs.config;
    out.elements.reserve(qs.elements.size());
    for (const auto& element : qs.elements) {
        AmplitudeElement mapped = element;
        try {
            const LabImage image = map_cm_to_lf(qs.config, element.direction);
            mapped.direction = image.n;
            mapped.d_omega =
                element.d_omega * cm_to_lf_solid_angle_ratio(qs.config, element.direction);
        } catch (const SingularityError&) {
            mapped.degenerate = true;
        }
        out.elements.push_back(mapped);  // d_f carried verbatim
    }
    return out;
}

double window_probability(const QuantizedSphere& qs, const Vec3& axis, double half_angle) {
    if (!(half_angle > 0.0) || half_angle > kPi)
        throw PreconditionError("window_probability: half angle must lie in (0, pi]");
    if (!is_unit(axis, 1e-10)) throw PreconditionError("window_probability: axis must be unit");
    const double cos_min = std::cos(half_angle);
    double acc = 0.0;
    for (const auto& element : qs.elements)
        if (!element.degenerate && axis.dot(element.direction) >= cos_min)
            acc += std::norm(element.d_f);
    return acc;
}

SquareOrderCheck square_order_invariance(const CollisionConfig& cfg, int N, const Vec3& axis,
                                         double half_angle) {
    const QuantizedSphere cm = quantize_cm(cfg, N);
    const QuantizedSphere lf = transport_to_lf(cm);
    const double cos_min = std::cos(half_angle);

    SquareOrderCheck check;
    // Square in CM first, then use the transported membership.
    std::vector<double> squared(cm.elements.size());
    for (std::size_t j = 0; j < cm.elements.size(); ++j)
        squared[j] = std::norm(cm.elements[j].d_f);
    for (std::size_t j = 0; j < lf.elements.size(); ++j)
        if (!lf.elements[j].degenerate && axis.dot(lf.elements[j].direction) >= cos_min)
            check.before += squared[j];
    // Transport first, square in LF.
    check.after = window_probability(lf, axis, half_angle);
    return check;
}

double angular_quantum(double A, double q, double mu) {
    if (!(A > 0.0) || !(q > 0.0)) throw PreconditionError("angular_quantum: A and q must be positive");
    const double root = 2.0 * kPi * (1.0 + mu);
    return root * root / (q * q * A);
}

double quantized_cross_section_density(const CollisionConfig& cfg, double A) {
    if (!(A > 0.0)) throw PreconditionError("quantized_cross_section_density: A must be positive");
    const double q = cfg.relative_speed();
    return cm_probability_density(cfg) * A * angular_quantum(A, q, cfg.mu);
}

}  // namespace scatter
