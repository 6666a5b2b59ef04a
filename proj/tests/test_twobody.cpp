#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "scatter/error.hpp"
#include "scatter/kinematics.hpp"
#include "scatter/numerics/random.hpp"
#include "scatter/twobody.hpp"
#include "support/oracles.hpp"

using namespace scatter;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("scattered wave closed form") {
    SUBCASE("fixed center with the atom at the origin") {
        CollisionConfig cfg;
        cfg.ki = {0.0, 0.0, 1.0};
        cfg.mu = 0.0;
        cfg.b = 1.0;
        const double R = 3.7;
        const auto value = scattered_wave_closed(cfg, Vec3{0.0, 0.0, R}, Vec3{0, 0, 0}, 0.0);
        const auto expected = std::exp(std::complex<double>(0.0, R)) / R;
        CHECK(std::abs(value - expected) < 1e-14);
    }
    SUBCASE("modulus law |b| / ((1+mu) |r_n - r_a|)") {
        numerics::SeededStream stream(0x5EEDCAFE, 50);
        CollisionConfig cfg;
        cfg.ki = {0.2, -0.4, 0.9};
        cfg.pi = {-0.3, 0.1, 0.2};
        cfg.mu = 0.8;
        cfg.b = {0.6, -0.3};
        for (int trial = 0; trial < 20; ++trial) {
            const Vec3 rn = 3.0 * oracles::random_unit(stream);
            const Vec3 ra = 1.5 * oracles::random_unit(stream);
            const double t = 2.0 * stream.uniform() - 1.0;
            const double modulus = std::abs(scattered_wave_closed(cfg, rn, ra, t));
            CHECK(modulus ==
                  doctest::Approx(std::abs(cfg.b) / (1.8 * (rn - ra).norm())).epsilon(1e-12));
        }
    }
    SUBCASE("zero total momentum worked value") {
        CollisionConfig cfg;
        cfg.ki = {0.0, 0.0, 0.5};
        cfg.pi = {0.0, 0.0, -0.5};
        cfg.mu = 1.0;  // q = |k_i - p_i| = 1, P = 0
        cfg.b = 1.0;
        const auto value = scattered_wave_closed(cfg, Vec3{0, 0, 1}, Vec3{0, 0, -1}, 0.0);
        CHECK(std::abs(value - 0.25 * std::exp(std::complex<double>(0.0, 1.0))) < 1e-14);
    }
    SUBCASE("coincidence point") {
        CollisionConfig cfg;
        cfg.ki = {0.0, 0.0, 1.0};
        const Vec3 r{0.3, 0.2, 0.1};
        CHECK_THROWS_AS(scattered_wave_closed(cfg, r, r, 0.0), SingularityError);
    }
}

TEST_CASE("amplitude decays exactly as the inverse separation") {
    CollisionConfig cfg;
    cfg.ki = {0.0, 0.0, 1.0};
    cfg.pi = {0.2, 0.0, 0.0};
    cfg.mu = 0.5;
    cfg.b = 1.0;
    const Vec3 dir = Vec3{1.0, 2.0, -1.0}.normalized();
    const double a1 = std::abs(scattered_wave_closed(cfg, 2.0 * dir, Vec3{0, 0, 0}, 0.0));
    const double a2 = std::abs(scattered_wave_closed(cfg, 6.0 * dir, Vec3{0, 0, 0}, 0.0));
    CHECK(a1 == doctest::Approx(3.0 * a2).epsilon(1e-13));
}

TEST_CASE("phase gradient along the separation is q/(1+mu)") {
    CollisionConfig cfg;
    cfg.ki = {0.0, 0.0, 1.2};
    cfg.pi = {0.3, 0.0, -0.4};
    cfg.mu = 0.6;
    cfg.b = 1.0;
    const Vec3 dir = Vec3{0.3, -0.5, 0.9}.normalized();
    const Vec3 ra{0.1, 0.2, -0.3};

    // d(arg)/dR along the separation direction at fixed atom position picks
    // up q/(1+mu) from the spherical factor plus the plane-wave piece
    // mu P.dir/(1+mu); subtract the latter.
    const double h = 1e-5;
    const double R = 4.0;
    const auto up = scattered_wave_closed(cfg, ra + (R + h) * dir, ra, 0.0);
    const auto dn = scattered_wave_closed(cfg, ra + (R - h) * dir, ra, 0.0);
    const double dphase = std::arg(up / dn) / (2.0 * h);
    const double plane_part =
        cfg.mu * cfg.total_momentum().dot(dir) / (1.0 + cfg.mu);
    CHECK(dphase - plane_part ==
          doctest::Approx(cfg.relative_speed() / (1.0 + cfg.mu)).epsilon(1e-6));
}

TEST_CASE("final amplitude kernel") {
    CollisionConfig cfg;
    cfg.ki = {0.0, 0.0, 1.0};
    cfg.mu = 1.0;
    cfg.b = {0.5, 0.25};

    SUBCASE("coefficient is i b / pi, independent of momenta") {
        const auto k1 = final_amplitude_kernel(cfg, Vec3{0.1, 0.2, 0.3}, Vec3{0.4, 0.5, 0.6});
        const auto k2 = final_amplitude_kernel(cfg, Vec3{0, 0, 0}, Vec3{0, 0, 0});
        CHECK(std::abs(k1.coefficient - std::complex<double>(0.0, 1.0) * cfg.b / kPi) < 1e-15);
        CHECK(std::abs(k1.coefficient - k2.coefficient) == 0.0);
    }
    SUBCASE("on-shell pairs from the root formula have vanishing residuals") {
        const Vec3 n = Vec3{0.6, 0.0, 0.8};
        const auto roots = final_momentum_roots(cfg, n);
        REQUIRE(!roots.empty());
        const Vec3 kf = roots[0].k_f * n;
        const auto kernel = final_amplitude_kernel(cfg, kf, cfg.ki + cfg.pi - kf);
        CHECK(kernel.momentum_residual.norm() < 1e-12);
        CHECK(std::abs(kernel.energy_residual) < 1e-10);
    }
    SUBCASE("b = 0 kills the coefficient") {
        cfg.b = 0.0;
        CHECK(std::abs(final_amplitude_kernel(cfg, cfg.ki, cfg.pi).coefficient) == 0.0);
    }
}

TEST_CASE("wave equation residual of the closed form") {
    CollisionConfig cfg;
    cfg.ki = {0.0, 0.0, 0.5};
    cfg.pi = {0.0, 0.3, -0.1};
    cfg.mu = 0.5;
    cfg.b = 0.8;

    const std::vector<std::pair<Vec3, Vec3>> probes = {
        {{1.0, 0.2, 0.5}, {-0.5, -0.2, -0.4}},
        {{-0.8, 0.9, 1.2}, {0.4, -0.7, 0.1}},
        {{0.3, -1.1, 0.8}, {-0.9, 0.5, -0.6}},
    };

    SUBCASE("plane waves alone solve the free pair equation") {
        CollisionConfig free = cfg;
        free.b = 0.0;
        CHECK(pde_residual(free, 1e-3, probes) < 1e-8);
    }
    SUBCASE("full field: second-order convergence to zero") {
        const double r1 = pde_residual(cfg, 2e-3, probes);
        const double r2 = pde_residual(cfg, 1e-3, probes);
        CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.2));
        CHECK(r2 < 1e-4);
    }
    SUBCASE("fixed-center reduction") {
        CollisionConfig heavy = cfg;
        heavy.mu = 0.0;
        heavy.pi = {0.0, 0.0, 0.0};
        const double r1 = pde_residual(heavy, 2e-3, probes);
        const double r2 = pde_residual(heavy, 1e-3, probes);
        CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.2));
    }
    SUBCASE("probes near the coincidence point are rejected") {
        const std::vector<std::pair<Vec3, Vec3>> close = {{{0.1, 0.0, 0.0}, {0.1002, 0.0, 0.0}}};
        CHECK_THROWS_AS(pde_residual(cfg, 1e-3, close), PreconditionError);
    }
}
