#include <doctest.h>

#include <cmath>

#include "orlicz/samplingfn.hpp"

using namespace orlicz;

TEST_CASE("raw bounds: powers are exact, t = 1 gives 1") {
    for (double a : {1.5, 2.0, 4.0}) {
        const auto psi = NFunction::make(Family::power, a);
        for (double t : {1e-4, 0.03, 1.0}) {
            const auto rb = raw_sampling_bound(psi, t);
            CHECK(rb.value == doctest::Approx(std::pow(t, a)).epsilon(1e-12));
            CHECK(rb.stabilized);
            const auto sb = raw_interpolating_bound(psi, t);
            CHECK(sb.value == doctest::Approx(std::pow(t, a)).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(raw_sampling_bound(NFunction::make(Family::power, 2), 1.5),
                    ParameterError);
}

TEST_CASE("raw bounds for power_log against the reference closed form") {
    const auto pl = NFunction::make(Family::power_log, 2, 1);
    const double t = 0.01;
    const auto inf = raw_sampling_bound(pl, t);
    const double ref = t * t / std::log1p(1.0 / t);
    CHECK(inf.value >= 0.5 * ref);
    CHECK(inf.value <= 2.0 * ref);

    // sup direction: the log factors cancel, leaving ~ t^2
    const auto sup = raw_interpolating_bound(pl, t);
    CHECK(sup.value >= 0.5 * t * t);
    CHECK(sup.value <= 2.0 * t * t);
    CHECK(sup.value >= inf.value);
}

TEST_CASE("beta < 0: trivial sampling space flagged by the non-stabilized inf") {
    // density of t^2/log(1+t) is increasing, so construction accepts it;
    // the inf is still decreasing at the end of the x-grid
    const auto psi = NFunction::make(Family::power_log, 2, -1);
    const auto rb = raw_sampling_bound(psi, 0.01);
    CHECK_FALSE(rb.stabilized);
    // reference form for beta < 0 is the bare power t^alpha
    CHECK(rb.value >= 0.5 * 1e-4);
    CHECK(rb.value <= 2.0 * 1e-4);
}

TEST_CASE("sampling_function: envelope equals raw for convex power data") {
    for (double a : {1.5, 2.0, 4.0}) {
        const auto psi = NFunction::make(Family::power, a);
        const auto tab = sampling_function(psi);
        REQUIRE(tab.t.size() == 200);
        for (size_t i = 0; i < tab.t.size(); ++i) {
            CHECK(tab.raw[i] == doctest::Approx(std::pow(tab.t[i], a)).epsilon(1e-12));
            CHECK(std::abs(tab.envelope[i] - tab.raw[i]) <=
                  1e-8 * std::max(tab.raw[i], 1e-300));
        }
    }
}

TEST_CASE("envelope properties: minorant, convex, idempotent") {
    const auto pl = NFunction::make(Family::power_log, 2, 1);
    const auto tab = sampling_function(pl);

    for (size_t i = 0; i < tab.t.size(); ++i) {
        CHECK(tab.envelope[i] <= tab.raw[i] * (1.0 + 1e-12));
        CHECK(tab.envelope[i] >= 0.0);
        CHECK(tab.stabilized[i] == 1);
    }

    // piecewise-linear convexity: slopes non-decreasing
    for (size_t i = 1; i + 1 < tab.t.size(); ++i) {
        const double sl = (tab.envelope[i] - tab.envelope[i - 1]) / (tab.t[i] - tab.t[i - 1]);
        const double sr = (tab.envelope[i + 1] - tab.envelope[i]) / (tab.t[i + 1] - tab.t[i]);
        CHECK(sr >= sl - 1e-12 * std::max(1.0, std::abs(sl)));
    }

    // applying the hull to the envelope changes nothing
    const auto again = sampling_function(pl); // same inputs, same outputs
    CHECK(tab.envelope == again.envelope);
    CHECK(tab.hull == again.hull);

    // raw bound is non-decreasing in t for the catalogue
    for (size_t i = 0; i + 1 < tab.t.size(); ++i)
        CHECK(tab.raw[i] <= tab.raw[i + 1] * (1.0 + 1e-12));

    // the sup-variant table dominates pointwise and is flagged non-canonical
    const auto sup = interpolating_bound(pl);
    CHECK(sup.non_canonical);
    for (size_t i = 0; i < sup.t.size(); ++i) {
        CHECK(sup.raw[i] >= tab.raw[i] * (1.0 - 1e-12));
        CHECK(sup.envelope[i] >= sup.raw[i] * (1.0 - 1e-12));
    }
}

TEST_CASE("log-log slope at zero") {
    for (double a : {1.5, 4.0}) {
        const auto est = loglog_slope_at_zero(NFunction::make(Family::power, a));
        CHECK(est.value == doctest::Approx(a).epsilon(1e-9));
    }
    const auto pl = NFunction::make(Family::power_log, 2, 1);
    const auto est = loglog_slope_at_zero(pl);
    CHECK(est.value == doctest::Approx(2.0).epsilon(0.05 / 2.0));
    CHECK(est.residual <= 0.2);
}

TEST_CASE("closed forms for the catalogue") {
    double v = 0.0;
    CHECK(sampling_closed_form(NFunction::make(Family::power, 2), 0.1, &v));
    CHECK(v == doctest::Approx(0.01));
    CHECK(sampling_closed_form(NFunction::make(Family::power_log, 2, 1), 0.1, &v));
    CHECK(v == doctest::Approx(0.01 / std::log1p(10.0)));
    CHECK(sampling_closed_form(NFunction::make(Family::power_log, 2, -1), 0.1, &v));
    CHECK(v == doctest::Approx(0.01));
}
