#include "scatter/wavepackets.hpp"

#include <cmath>
#include <numbers>

#include "scatter/error.hpp"
#include "scatter/numerics/finite_difference.hpp"
#include "scatter/numerics/quadrature.hpp"

namespace scatter {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> kImagUnit{0.0, 1.0};

double sinc(double x) {
    if (std::abs(x) < 1e-6) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

// Rotation taking unit vector a onto unit vector b (Rodrigues form).
Vec3 rotate_between(const Vec3& a, const Vec3& b, const Vec3& v) {
    const Vec3 axis = a.cross(b);
    const double s = axis.norm();
    const double c = a.dot(b);
    if (s < 1e-14) {
        if (c > 0.0) return v;  // identity
        Vec3 u, w;
        orthonormal_frame(a, u, w);
        return 2.0 * u.dot(v) * u - v;  // rotation by pi about u
    }
    const Vec3 k = axis / s;
    return v * c + k.cross(v) * s + k * (k.dot(v) * (1.0 - c));
}

double reflected_intensity(double pz_abs, double u) {
    if (pz_abs * pz_abs <= u) return 1.0;
    const double w = std::sqrt(pz_abs * pz_abs - u);
    const double r = (pz_abs - w) / (pz_abs + w);
    return r * r;
}

}  // namespace

std::complex<double> packet_value(const PacketSpec& spec, const Vec3& r, double t) {
    if (!(spec.s > 0.0)) throw PreconditionError("packet_value: s must be positive");
    const Vec3 offset = r - spec.k * t;
    const double dist = offset.norm();
    const double carrier = spec.k.dot(r) - carrier_frequency(spec) * t;

    switch (spec.family) {
        case PacketFamily::gaussian: {
            const std::complex<double> spread = 1.0 + kImagUnit * t * spec.s * spec.s;
            const std::complex<double> envelope =
                std::exp(-spec.s * spec.s * offset.norm2() / (2.0 * spread));
            const std::complex<double> norm =
                std::pow(spec.s / (std::sqrt(kPi) * spread), 1.5);
            return norm * std::exp(kImagUnit * carrier) * envelope;
        }
        case PacketFamily::dB_singular: {
            if (!(dist > 0.0))
                throw SingularityError("packet_value: singular packet at its moving center");
            const double C = std::sqrt(spec.s / (2.0 * kPi));
            return C * std::exp(kImagUnit * carrier) * std::exp(-spec.s * dist) / dist;
        }
        case PacketFamily::dB_nonsingular:
            return std::exp(kImagUnit * carrier) * sinc(spec.s * dist);
    }
    throw PreconditionError("packet_value: unknown family");
}

double carrier_frequency(const PacketSpec& spec) {
    const double k2 = spec.k.norm2();
    switch (spec.family) {
        case PacketFamily::gaussian:
            return 0.5 * k2;
        case PacketFamily::dB_singular:
            return 0.5 * (k2 - spec.s * spec.s);
        case PacketFamily::dB_nonsingular:
            return 0.5 * (k2 + spec.s * spec.s);
    }
    throw PreconditionError("carrier_frequency: unknown family");
}

double packet_dispersion(const PacketSpec& spec, const Vec3& p) {
    switch (spec.family) {
        case PacketFamily::gaussian:
        case PacketFamily::dB_nonsingular:
            return 0.5 * p.norm2();
        case PacketFamily::dB_singular:
            // (p^2 - (p-k)^2 - s^2)/2: each component rides at the carrier
            // frequency shifted by its offset from the peak, not on the free
            // shell; the packet would spread otherwise.
            return 0.5 * (p.norm2() - (p - spec.k).norm2() - spec.s * spec.s);
    }
    throw PreconditionError("packet_dispersion: unknown family");
}

FourierComponent packet_fourier(const PacketSpec& spec, const Vec3& p) {
    FourierComponent component;
    component.omega = packet_dispersion(spec, p);
    const double off2 = (p - spec.k).norm2();
    switch (spec.family) {
        case PacketFamily::gaussian: {
            component.amplitude = std::pow(1.0 / (2.0 * kPi * spec.s * std::sqrt(kPi)), 1.5) *
                                  std::exp(-off2 / (2.0 * spec.s * spec.s));
            return component;
        }
        case PacketFamily::dB_singular: {
            const double C = std::sqrt(spec.s / (2.0 * kPi));
            const double cube = 2.0 * kPi;
            component.amplitude = C * 4.0 * kPi / (cube * cube * cube) / (off2 + spec.s * spec.s);
            return component;
        }
        case PacketFamily::dB_nonsingular:
            component.shell = true;
            return component;
    }
    throw PreconditionError("packet_fourier: unknown family");
}

double shell_integrate(const PacketSpec& spec, const std::function<double(const Vec3&)>& f,
                       int quadrature_order) {
    if (spec.family != PacketFamily::dB_nonsingular)
        throw PreconditionError("shell_integrate: only the nonsingular family has a shell spectrum");
    const auto quad = numerics::sphere_quadrature(quadrature_order);
    double acc = 0.0;
    for (std::size_t i = 0; i < quad.size(); ++i)
        acc += quad.weights[i] * f(spec.k + spec.s * quad.directions[i]);
    return 0.5 * spec.s * acc;
}

PacketNorm packet_norm(const PacketSpec& spec, double t, int radial_nodes) {
    if (spec.family == PacketFamily::dB_nonsingular) return {false, 0.0};

    const double width = spec.family == PacketFamily::gaussian
                             ? std::sqrt(1.0 + t * t * std::pow(spec.s, 4)) / spec.s
                             : 1.0 / spec.s;
    const double umax = spec.family == PacketFamily::gaussian ? 12.0 * width : 25.0 * width;
    const auto rule = numerics::gauss_legendre(radial_nodes, 0.0, umax);

    const Vec3 center = spec.k * t;
    double acc = 0.0;
    for (int i = 0; i < radial_nodes; ++i) {
        const double u = rule.nodes[i];
        const double mod2 = std::norm(packet_value(spec, center + Vec3{u, 0.0, 0.0}, t));
        acc += rule.weights[i] * 4.0 * kPi * u * u * mod2;
    }
    return {true, acc};
}

double front_area_closed(const PacketSpec& spec, double t) {
    switch (spec.family) {
        case PacketFamily::gaussian:
            return kPi * (1.0 + t * t * std::pow(spec.s, 4)) / (spec.s * spec.s);
        case PacketFamily::dB_singular:
            return kPi / (3.0 * spec.s * spec.s);
        case PacketFamily::dB_nonsingular:
            throw DomainError("front_area: nonsingular packet has infinite front area");
    }
    throw PreconditionError("front_area: unknown family");
}

double front_area_numeric(const PacketSpec& spec, double t, int radial_nodes) {
    if (spec.family == PacketFamily::dB_nonsingular)
        throw DomainError("front_area: nonsingular packet has infinite front area");

    // Int pi rho^2 |psi|^2 d^3r = (8 pi^2 / 3) Int u^4 |psi(u)|^2 du for a
    // co-moving radial modulus.
    const double width = spec.family == PacketFamily::gaussian
                             ? std::sqrt(1.0 + t * t * std::pow(spec.s, 4)) / spec.s
                             : 1.0 / spec.s;
    const double umax = spec.family == PacketFamily::gaussian ? 14.0 * width : 30.0 * width;
    const auto rule = numerics::gauss_legendre(radial_nodes, 0.0, umax);

    const Vec3 center = spec.k * t;
    double acc = 0.0;
    for (int i = 0; i < radial_nodes; ++i) {
        const double u = rule.nodes[i];
        const double mod2 = std::norm(packet_value(spec, center + Vec3{u, 0.0, 0.0}, t));
        acc += rule.weights[i] * u * u * u * u * mod2;
    }
    return 8.0 * kPi * kPi / 3.0 * acc;
}

double schrodinger_residual(const PacketSpec& spec, double grid_spacing,
                            std::span<const Vec3> probes, double t) {
    if (!(grid_spacing > 0.0))
        throw PreconditionError("schrodinger_residual: spacing must be positive");

    std::vector<std::vector<double>> points;
    points.reserve(probes.size());
    for (const Vec3& probe : probes) {
        if (spec.family == PacketFamily::dB_singular &&
            (probe - spec.k * t).norm() < 4.0 * grid_spacing)
            throw PreconditionError("schrodinger_residual: probe within 4 spacings of the center");
        points.push_back({probe.x, probe.y, probe.z});
    }

    const auto psi = [&spec](std::span<const double> x, double time) {
        return packet_value(spec, Vec3{x[0], x[1], x[2]}, time);
    };
    const double coeffs[1] = {0.5};
    return numerics::schrodinger_residual_max(psi, coeffs, grid_spacing, points, t);
}

std::complex<double> genesis_transform(std::complex<double> q, const Vec3& k, const Vec3& r,
                                       double t) {
    const Vec3 offset = r - k * t;
    const double dist = offset.norm();
    if (!(dist > 0.0)) throw SingularityError("genesis_transform: singular at the moving center");
    const std::complex<double> phase =
        kImagUnit * (k.dot(r) - 0.5 * k.norm2() * t) - kImagUnit * 0.5 * q * q * t;
    return std::exp(phase) * std::exp(kImagUnit * q * dist) / dist;
}

double reflection_deficit(const PacketSpec& spec, double u, int quadrature_nodes) {
    if (spec.family == PacketFamily::dB_nonsingular)
        throw PreconditionError("reflection_deficit: nonsingular packet is not normalizable");
    if (!(u > 0.0)) throw PreconditionError("reflection_deficit: step height must be positive");
    const double kz = spec.k.z;
    if (!(kz * kz < u))
        throw DomainError("reflection_deficit: supercritical incidence k_z^2 >= u");

    const double su = std::sqrt(u);
    const double s = spec.s;
    const int half = std::max(quadrature_nodes / 2, 16);

    double leakage = 0.0;  // Int (1 - |R|^2) marginal(p_z) dp_z over |p_z| > sqrt(u)
    if (spec.family == PacketFamily::dB_singular) {
        // Lorentzian marginal (s/pi)/((p_z - k_z)^2 + s^2); the substitution
        // p_z = k_z + s tan(phi) makes the weight flat and keeps the full tails.
        for (const double side : {+1.0, -1.0}) {
            const double lo = std::atan((side * su - kz) / s);
            const double a = side > 0.0 ? lo : -0.5 * kPi;
            const double b = side > 0.0 ? 0.5 * kPi : lo;
            const auto rule = numerics::gauss_legendre(half, a, b);
            for (int i = 0; i < half; ++i) {
                const double pz = kz + s * std::tan(rule.nodes[i]);
                leakage += rule.weights[i] / kPi * (1.0 - reflected_intensity(std::abs(pz), u));
            }
        }
    } else {
        // Gaussian marginal (1/(s sqrt(pi))) exp(-(p_z - k_z)^2 / s^2).
        for (const double side : {+1.0, -1.0}) {
            const double inner = side * su;
            const double a = side > 0.0 ? inner : inner - 50.0 * s;
            const double b = side > 0.0 ? inner + 50.0 * s : inner;
            const auto rule = numerics::gauss_legendre(half, a, b);
            for (int i = 0; i < half; ++i) {
                const double pz = rule.nodes[i];
                const double arg = (pz - kz) / s;
                leakage += rule.weights[i] / (s * std::sqrt(kPi)) * std::exp(-arg * arg) *
                           (1.0 - reflected_intensity(std::abs(pz), u));
            }
        }
    }
    return leakage;
}

std::vector<double> scatter_fixed_center(const PacketSpec& spec, std::complex<double> b,
                                         const Vec3& rho, std::span<const Vec3> directions) {
    if (spec.family == PacketFamily::dB_nonsingular)
        throw PreconditionError("scatter_fixed_center: packet must be normalizable");
    const double k = spec.k.norm();
    if (!(k > 0.0)) throw PreconditionError("scatter_fixed_center: packet must be moving");
    if (rho.norm() > 0.0 && std::abs(rho.dot(spec.k)) > 1e-10 * rho.norm() * k)
        throw PreconditionError("scatter_fixed_center: impact parameter must be transverse");

    const Vec3 khat = spec.k / k;
    const std::complex<double> sharp = b * k / (2.0 * kPi);

    std::vector<double> weights;
    weights.reserve(directions.size());
    for (const Vec3& n : directions) {
        if (!is_unit(n, 1e-10))
            throw PreconditionError("scatter_fixed_center: directions must be unit vectors");
        const Vec3 rho_rotated = rotate_between(khat, n, rho);
        const std::complex<double> translation =
            std::exp(kImagUnit * (k * n.dot(rho_rotated - rho)));
        weights.push_back(std::norm(sharp * translation));
    }
    return weights;
}

}  // namespace scatter
