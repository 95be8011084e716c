#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orlicz/numerics.hpp"

using namespace orlicz;

TEST_CASE("log_grid spans endpoints") {
    const auto g = log_grid(1e-3, 1e3, 7);
    CHECK(g.size() == 7);
    CHECK(g.front() == 1e-3);
    CHECK(g.back() == 1e3);
    CHECK(g[3] == doctest::Approx(1.0).epsilon(1e-12));
    for (size_t i = 0; i + 1 < g.size(); ++i)
        CHECK(g[i] < g[i + 1]);
}

TEST_CASE("solve_monotone on both orientations") {
    const auto up = solve_monotone([](double x) { return x * x; }, 9.0, 1.0, 1e-12, 200, true);
    CHECK(up.x == doctest::Approx(3.0).epsilon(1e-11));
    const auto down =
        solve_monotone([](double x) { return 1.0 / x; }, 0.25, 1.0, 1e-12, 200, false);
    CHECK(down.x == doctest::Approx(4.0).epsilon(1e-11));
    CHECK_THROWS_AS(solve_monotone([](double x) { return x + 2.0; }, 1.0, 1.0, 1e-12, 200, true),
                    ConvergenceError);
}

TEST_CASE("periodic_mean integrates smooth periodic functions") {
    const auto sq = periodic_mean([](double x) { return std::cos(x) * std::cos(x); }, 64, 2.0,
                                  1e-12, 1 << 20);
    CHECK(sq.value == doctest::Approx(0.5).epsilon(1e-12));
    // (1/2pi) int e^{cos x} dx = I_0(1)
    const auto bessel =
        periodic_mean([](double x) { return std::exp(std::cos(x)); }, 64, 2.0, 1e-12, 1 << 20);
    CHECK(bessel.value == doctest::Approx(1.2660658777520084).epsilon(1e-12));
}

TEST_CASE("periodic_mean handles |x|-type kinks with the Richardson level") {
    // (1/2pi) int |sin x| dx = 2/pi, kinks at 0 and pi sit on grid points
    const auto r =
        periodic_mean([](double x) { return std::abs(std::sin(x)); }, 64, 2.0, 1e-11, 1 << 22);
    CHECK(r.value == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-9));
}

TEST_CASE("integrate_log") {
    const auto one = integrate_log([](double r) { return 1.0 / r; }, 1.0, std::numbers::e, 1e-12,
                                   1 << 20);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-11));
    const auto half = integrate_log([](double r) { return r; }, 1e-12, 1.0, 1e-12, 1 << 20);
    CHECK(half.value == doctest::Approx(0.5).epsilon(1e-10));
}
