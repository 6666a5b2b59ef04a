#include <doctest.h>

#include <cmath>
#include <numbers>

#include "scatter/cmpath.hpp"
#include "scatter/error.hpp"
#include "scatter/numerics/random.hpp"
#include "scatter/quantization.hpp"
#include "scatter/thermal.hpp"
#include "support/oracles.hpp"

using namespace scatter;

namespace {
constexpr double kPi = std::numbers::pi;

CollisionConfig reference_config(double mu) {
    CollisionConfig cfg;
    cfg.ki = {0.0, 0.0, 1.0};
    cfg.mu = mu;
    cfg.b = 1.0;
    return cfg;
}
}  // namespace

TEST_CASE("equal-area quantization in the CM frame") {
    const auto cfg = reference_config(1.0);
    const auto qs = quantize_cm(cfg, 100);
    REQUIRE(qs.elements.size() == 100);

    const std::complex<double> f_c = cm_amplitude_density(cfg);
    std::complex<double> df_sum = 0.0;
    double area_sum = 0.0, df2_sum = 0.0;
    for (const auto& element : qs.elements) {
        CHECK(std::abs(element.d_omega - 4.0 * kPi / 100.0) < 1e-12);
        CHECK(is_unit(element.direction, 1e-12));
        df_sum += element.d_f;
        df2_sum += std::norm(element.d_f);
        area_sum += element.d_omega;
    }
    CHECK(std::abs(area_sum - 4.0 * kPi) < 1e-10);
    CHECK(std::abs(df_sum - f_c * 4.0 * kPi) < 1e-12);
    CHECK(df2_sum ==
          doctest::Approx(std::norm(f_c) * 16.0 * kPi * kPi / 100.0).epsilon(1e-12));

    CHECK_THROWS_AS(quantize_cm(cfg, 7), PreconditionError);
}

TEST_CASE("all amplitude elements are equal in CM") {
    const auto qs = quantize_cm(reference_config(0.6), 240);
    const double first = std::abs(qs.elements.front().d_f);
    for (const auto& element : qs.elements)
        CHECK(std::abs(element.d_f) == doctest::Approx(first).epsilon(1e-12));
}

TEST_CASE("transport to the laboratory frame") {
    SUBCASE("fixed center transports identically") {
        const auto cm = quantize_cm(reference_config(0.0), 64);
        const auto lf = transport_to_lf(cm);
        REQUIRE(lf.elements.size() == cm.elements.size());
        for (std::size_t i = 0; i < cm.elements.size(); ++i) {
            CHECK((lf.elements[i].direction - cm.elements[i].direction).norm() < 1e-13);
            CHECK(lf.elements[i].d_omega == doctest::Approx(cm.elements[i].d_omega).epsilon(1e-12));
            CHECK(std::abs(lf.elements[i].d_f - cm.elements[i].d_f) == 0.0);
        }
    }
    SUBCASE("element count and amplitude multiset survive") {
        const auto cm = quantize_cm(reference_config(1.0), 500);
        const auto lf = transport_to_lf(cm);
        REQUIRE(lf.elements.size() == 500);
        double before = 0.0, after = 0.0;
        for (std::size_t i = 0; i < 500; ++i) {
            before += std::norm(cm.elements[i].d_f);
            after += std::norm(lf.elements[i].d_f);
        }
        CHECK(after == doctest::Approx(before).epsilon(1e-12));
    }
    SUBCASE("transported cells tile the kinematically allowed cap") {
        // At rest with mu < 1 the map is a bijection onto the sphere, so the
        // image solid angles must still sum to 4 pi.
        const auto cm = quantize_cm(reference_config(0.5), 4000);
        const auto lf = transport_to_lf(cm);
        double area = 0.0;
        for (const auto& element : lf.elements) {
            REQUIRE(!element.degenerate);
            area += element.d_omega;
        }
        CHECK(area == doctest::Approx(4.0 * kPi).epsilon(1e-3));
    }
    SUBCASE("only CM spheres can be transported") {
        auto lf = transport_to_lf(quantize_cm(reference_config(0.5), 16));
        CHECK_THROWS_AS(transport_to_lf(lf), PreconditionError);
    }
}

TEST_CASE("window probabilities") {
    const auto cfg = reference_config(1.0);
    const auto qs = quantize_cm(cfg, 4000);
    const double full = window_probability(qs, Vec3{0.0, 0.0, 1.0}, kPi);
    const double expected_full =
        std::norm(cm_amplitude_density(cfg)) * 16.0 * kPi * kPi / 4000.0;
    CHECK(full == doctest::Approx(expected_full).epsilon(1e-12));

    const double half = window_probability(qs, Vec3{0.0, 0.0, 1.0}, 0.5 * kPi);
    CHECK(std::abs(half - 0.5 * full) / full < 2.0 / std::sqrt(4000.0));

    const double none = window_probability(qs, Vec3{1.0, 0.0, 0.0}, 1e-4);
    CHECK(none == 0.0);
}

TEST_CASE("squaring before or after transport is the same") {
    numerics::SeededStream stream(0x5EEDCAFE, 80);
    SUBCASE("worked equal-mass case") {
        const auto check = square_order_invariance(reference_config(1.0), 1000,
                                                   Vec3{0.0, 0.0, 1.0}, 0.4);
        CHECK(check.before == doctest::Approx(check.after).epsilon(1e-12));
        CHECK(check.before > 0.0);
    }
    SUBCASE("random mass ratios and cones") {
        for (int trial = 0; trial < 20; ++trial) {
            CollisionConfig cfg;
            cfg.ki = {0.0, 0.0, 1.0};
            cfg.pi = 0.5 * stream.uniform() * oracles::random_unit(stream);
            cfg.mu = 0.05 + 0.9 * stream.uniform();
            cfg.b = {1.0, 0.3};
            const auto check = square_order_invariance(
                cfg, 512, oracles::random_unit(stream), 0.1 + 2.0 * stream.uniform());
            CHECK(check.before == doctest::Approx(check.after).epsilon(1e-12));
        }
    }
    SUBCASE("fixed center trivially") {
        const auto check = square_order_invariance(reference_config(0.0), 256,
                                                   Vec3{0.0, 0.0, 1.0}, 1.0);
        CHECK(check.before == doctest::Approx(check.after).epsilon(1e-15));
    }
}

TEST_CASE("angular quantum") {
    CHECK(angular_quantum(16.0 * kPi * kPi, 1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));

    // The front area inverts the quantum for every configuration.
    numerics::SeededStream stream(0x5EEDCAFE, 81);
    for (int trial = 0; trial < 20; ++trial) {
        CollisionConfig cfg;
        cfg.ki = (0.3 + stream.uniform()) * oracles::random_unit(stream);
        cfg.pi = stream.uniform() * oracles::random_unit(stream);
        cfg.mu = 0.1 + stream.uniform();
        const double quantum =
            angular_quantum(front_area(cfg), cfg.relative_speed(), cfg.mu);
        CHECK(quantum == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK(angular_quantum(8.0, 1.3, 0.4) ==
          doctest::Approx(2.0 * angular_quantum(16.0, 1.3, 0.4)).epsilon(1e-13));
}

TEST_CASE("quantized cross-section density recovers the flat value") {
    numerics::SeededStream stream(0x5EEDCAFE, 82);
    for (int trial = 0; trial < 20; ++trial) {
        CollisionConfig cfg;
        cfg.ki = (0.3 + stream.uniform()) * oracles::random_unit(stream);
        cfg.pi = stream.uniform() * oracles::random_unit(stream);
        cfg.mu = 0.1 + stream.uniform();
        cfg.b = {stream.uniform() + 0.1, stream.uniform()};
        const double area = 0.5 + 30.0 * stream.uniform();
        const double one_mu = 1.0 + cfg.mu;
        CHECK(quantized_cross_section_density(cfg, area) ==
              doctest::Approx(std::norm(cfg.b) / (one_mu * one_mu)).epsilon(1e-12));
    }

    CollisionConfig fixed = reference_config(0.0);
    CHECK(quantized_cross_section_density(fixed, 4.0) == doctest::Approx(1.0).epsilon(1e-13));
    fixed.b = 0.0;
    CHECK(quantized_cross_section_density(fixed, 4.0) == 0.0);
}

TEST_CASE("window density converges to the CM density") {
    const auto cfg = reference_config(0.7);
    const Vec3 axis = Vec3{0.2, -0.3, 0.9}.normalized();
    const double half_angle = 0.8;
    const double cap = 2.0 * kPi * (1.0 - std::cos(half_angle));
    const double target = cm_probability_density(cfg);

    double previous_error = 1e9;
    for (const int N : {500, 2000, 8000, 32000}) {
        const auto qs = quantize_cm(cfg, N);
        // Each element contributes |F'|^2 (4pi/N)^2, and the cap holds about
        // N cap / 4pi of them, so window * N / (4pi cap) estimates |F'|^2.
        const double estimate =
            window_probability(qs, axis, half_angle) * N / (4.0 * kPi) / cap;
        const double error = std::abs(estimate - target) / target;
        CHECK(error < previous_error + 1e-12);
        previous_error = error;
    }
    CHECK(previous_error < 0.02);
}
