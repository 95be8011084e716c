#include <doctest.h>

#include <cmath>
#include <vector>

#include "orlicz/nfunction.hpp"
#include "orlicz/numerics.hpp"

using namespace orlicz;

namespace {

// Independent inverse oracle: bracket on a dense log grid, then plain
// interval halving inside the bracketing cell.
double grid_inverse(const NFunction& nf, double y) {
    const auto g = log_grid(1e-9, 1e9, 200001);
    size_t lo = 0, hi = g.size() - 1;
    while (hi - lo > 1) {
        const size_t mid = (lo + hi) / 2;
        (nf.value(g[mid]) < y ? lo : hi) = mid;
    }
    double a = g[lo], b = g[hi];
    for (int i = 0; i < 120; ++i) {
        const double m = 0.5 * (a + b);
        (nf.value(m) < y ? a : b) = m;
    }
    return 0.5 * (a + b);
}

const NFunction& power_log_21() {
    static const NFunction nf = NFunction::make(Family::power_log, 2, 1);
    return nf;
}

std::vector<NFunction> catalogue() {
    return {NFunction::make(Family::power, 1.5), NFunction::make(Family::power, 2),
            NFunction::make(Family::power, 4), NFunction::make(Family::power_log, 2, 1)};
}

} // namespace

TEST_CASE("construction and normalization") {
    const auto sq = NFunction::make(Family::power, 2);
    CHECK(sq.value(3.0) == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(sq.value(1.0) == doctest::Approx(1.0).epsilon(1e-13));

    const auto& pl = power_log_21();
    CHECK(std::abs(pl.value(1.0) - 1.0) <= 1e-12);
    // scaling is by 1/log(2)
    CHECK(pl.norm_scale() == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(NFunction::make(Family::power_log, 1, 1), ParameterError);
    CHECK_THROWS_AS(NFunction::make(Family::power, 0.5), ParameterError); // concave
    CHECK_THROWS_AS(NFunction::make(Family::power, 200), ParameterError); // overflows the grid
}

TEST_CASE("inverse: exact inverse within 1e-9, against the grid oracle") {
    const auto sq = NFunction::make(Family::power, 2);
    CHECK(sq.inverse(4.0) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(sq.inverse(0.0) == 0.0);

    const auto& pl = power_log_21();
    CHECK(pl.inverse(1.0) == doctest::Approx(1.0).epsilon(1e-9));
    // frozen oracle values for y in {0.5, 5, 500}
    const double expect[3] = {0.77657306622131728, 1.8263783875736408, 11.680815358180553};
    const double ys[3] = {0.5, 5.0, 500.0};
    for (int i = 0; i < 3; ++i) {
        CHECK(pl.inverse(ys[i]) == doctest::Approx(expect[i]).epsilon(1e-8));
        CHECK(pl.inverse(ys[i]) == doctest::Approx(grid_inverse(pl, ys[i])).epsilon(1e-8));
        CHECK(pl.value(pl.inverse(ys[i])) == doctest::Approx(ys[i]).epsilon(1e-9));
    }
}

TEST_CASE("inverse composes with value across the whole range") {
    for (const auto& nf : catalogue())
        for (double t : log_grid(1e-8, 1e8, 33))
            CHECK(nf.inverse(nf.value(t)) == doctest::Approx(t).epsilon(1e-9));
}

TEST_CASE("density chain phi(t) <= t phi'(t) <= phi(2t)") {
    for (const auto& nf : catalogue()) {
        for (double t : log_grid(1e-8, 1e8, 201)) {
            const double lhs = nf.value(t);
            const double mid = t * nf.density(t);
            const double rhs = nf.value(2.0 * t);
            CHECK(lhs <= mid * (1.0 + 1e-10));
            CHECK(mid <= rhs * (1.0 + 1e-10));
        }
    }
}

TEST_CASE("superhomogeneity phi(at) >= a phi(t) for a >= 1") {
    for (const auto& nf : catalogue())
        for (double t : log_grid(1e-6, 1e6, 25))
            for (double a : {1.0, 1.5, 4.0, 100.0})
                CHECK(nf.value(a * t) >= a * nf.value(t) * (1.0 - 1e-12));
}

TEST_CASE("conjugate: Legendre transform") {
    const auto sq = NFunction::make(Family::power, 2);
    CHECK(sq.conjugate(2.0) == doctest::Approx(1.0).epsilon(1e-9)); // s^2/4
    const auto p4 = NFunction::make(Family::power, 4);
    // stationary-point algebra: phi*(s) = 3 (s/4)^{4/3}, so phi*(4) = 3
    CHECK(p4.conjugate(4.0) == doctest::Approx(3.0).epsilon(1e-9));
    // grid-maximization cross-check
    double grid_max = 0.0;
    for (double t : log_grid(1e-6, 1e6, 4001))
        grid_max = std::max(grid_max, 4.0 * t - p4.value(t));
    CHECK(p4.conjugate(4.0) >= grid_max * (1.0 - 1e-9));

    // Young's inequality s t <= phi(t) + phi*(s)
    for (const auto& nf : {sq, power_log_21()})
        for (double s : log_grid(1e-3, 1e3, 50))
            for (double t : log_grid(1e-3, 1e3, 50))
                CHECK(s * t <= (nf.value(t) + nf.conjugate(s)) * (1.0 + 1e-12));

    // phi = t has a flat density; no bracket exists for the slope equation
    CHECK_THROWS_AS(NFunction::make(Family::power, 1).conjugate(2.0), ConvergenceError);
}

TEST_CASE("delta2 constants") {
    const auto d2 = delta2_constant(NFunction::make(Family::power, 2));
    CHECK(d2.value == doctest::Approx(4.0).epsilon(1e-12));
    CHECK_FALSE(d2.non_delta2);
    CHECK(delta2_constant(NFunction::make(Family::power, 1.5)).value ==
          doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-12));
    CHECK(delta2_constant(NFunction::make(Family::power, 4)).value ==
          doctest::Approx(16.0).epsilon(1e-12));

    const auto dpl = delta2_constant(power_log_21());
    CHECK(dpl.value >= 4.0);
    CHECK(dpl.value <= 8.0);
    CHECK(dpl.value == doctest::Approx(8.0).epsilon(1e-4));
    CHECK_FALSE(dpl.non_delta2);

    // density keeps growing exponentially through the top of the grid:
    // the running sup climbs at the boundary and the flag must fire
    const auto runaway = NFunction::make_custom(
        [](double t) {
            const double u = std::min(t, 2e8);
            return 1e7 * std::expm1(u / 1e7) - u + (t > 2e8 ? (t - 2e8) * std::expm1(20.0) : 0.0);
        },
        [](double t) { return std::expm1(std::min(t, 2e8) / 1e7); }, false, "runaway");
    CHECK(delta2_constant(runaway).non_delta2);
}

TEST_CASE("multiplicativity certificates: powers give C = 1 in both modes") {
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        const auto nf = NFunction::make(Family::power, p);
        const auto sup = multiplicativity_constant(nf, MultMode::super);
        const auto sub = multiplicativity_constant(nf, MultMode::sub);
        CHECK(sup.constant == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(sub.constant == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(sup.witness_a < 1.0);
        CHECK(sup.witness_b > 1.0);
        CHECK(sup.witness_a * sup.witness_b >= 1.0 - 1e-12);
    }
}

TEST_CASE("multiplicativity certificate for power_log, with random cross-check") {
    const auto& pl = power_log_21();
    const auto sup = multiplicativity_constant(pl, MultMode::super);
    CHECK(sup.constant >= 1.0);
    CHECK(sup.constant <= 1.001); // corner supremum: the constant is essentially 1
    CHECK(sup.margin >= -1e-9);

    const auto sub = multiplicativity_constant(pl, MultMode::sub);
    CHECK(sub.constant == doctest::Approx(0.027235149565058236).epsilon(1e-3));
    CHECK(sub.margin >= -1e-9);

    // 1e5 random admissible pairs against both certified inequalities
    std::uint64_t state = 12345;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1p-53;
    };
    for (int i = 0; i < 100000; ++i) {
        const double b = std::exp(next() * std::log(1e6));
        const double a_lo = std::max(1e-6, 1.0 / b);
        const double a = a_lo * std::exp(next() * -std::log(a_lo));
        if (!(a < 1.0 && b > 1.0 && a * b >= 1.0))
            continue;
        const double prod = pl.value(a) * pl.value(b);
        CHECK(prod <= pl.value(sup.constant * a * b) * (1.0 + 1e-6));
        CHECK(pl.value(sub.constant * a * b) <= prod * (1.0 + 1e-6));
    }
}

TEST_CASE("Matuszewska-Orlicz indices") {
    for (double p : {1.5, 2.0, 4.0}) {
        const auto est = matuszewska_indices(NFunction::make(Family::power, p));
        CHECK(est.alpha_index == doctest::Approx(p).epsilon(1e-3));
        CHECK(est.beta_index == doctest::Approx(p).epsilon(1e-3));
    }
    const auto i15 = matuszewska_indices(NFunction::make(Family::power, 1.5));
    const auto i4 = matuszewska_indices(NFunction::make(Family::power, 4));
    CHECK(i15.alpha_index < i4.alpha_index);

    const auto ipl = matuszewska_indices(power_log_21());
    CHECK(ipl.alpha_index == doctest::Approx(2.0).epsilon(2e-2));
    CHECK(ipl.beta_index == doctest::Approx(2.0).epsilon(2e-2));
    CHECK(ipl.alpha_index <= ipl.beta_index + 5e-2);
    CHECK(ipl.alpha_index >= 1.0 - 5e-2);
}

TEST_CASE("power-weighted integral matches the power_log closed form") {
    // int_0^s phi(r)/r^2 dr = ((1+s)log(1+s) - s)/log 2 for normalized
    // r^2 log(1+r)
    const auto& pl = power_log_21();
    for (double s : log_grid(1e-4, 1e4, 10)) {
        const double cf = ((1.0 + s) * std::log1p(s) - s) / std::log(2.0);
        double rem = 0.0;
        CHECK(power_weighted_integral(pl, s, &rem) == doctest::Approx(cf).epsilon(1e-8));
        CHECK(rem <= 1e-9);
    }
}

TEST_CASE("weak-type interpolation conditions") {
    const auto sq = NFunction::make(Family::power, 2);
    const auto small_sq = check_small_condition(sq, 1.0);
    CHECK(small_sq.sup_ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(small_sq.holds);
    const auto big_sq = check_big_condition(sq, 1.0, 3.0);
    CHECK(big_sq.sup_ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(big_sq.holds);

    const auto& pl = power_log_21();
    const auto small_pl = check_small_condition(pl, 1.0);
    CHECK(small_pl.holds);
    CHECK(small_pl.sup_ratio == doctest::Approx(0.92761859158872306).epsilon(1e-6));
    const auto big_pl = check_big_condition(pl, 1.0, 4.0);
    CHECK(big_pl.holds);
    CHECK(big_pl.sup_ratio < 1.0);
    // closed-form oracle: int_s^inf phi(r)/r^5 dr =
    //   (log(1+s)/(2s^2) + 1/(2s) - log(1+1/s)/2)/log 2, hence
    //   R(s) = (log(1+s) + s - s^2 log(1+1/s)) / (2 log(1+s))
    auto big_cf = [](double s) {
        return (std::log1p(s) + s - s * s * std::log1p(1.0 / s)) / (2.0 * std::log1p(s));
    };
    double cf_sup = 0.0;
    for (double s : log_grid(1e-6, 1e6, 400)) {
        CHECK(big_cf(s) <= 1.0 + 1e-12);
        cf_sup = std::max(cf_sup, big_cf(s));
    }
    CHECK(big_pl.sup_ratio == doctest::Approx(cf_sup).epsilon(1e-6));
    // the tail bound cannot be certified once p sits below the growth
    CHECK_THROWS_AS(check_big_condition(sq, 1.0, 1.5), ConvergenceError);
}
