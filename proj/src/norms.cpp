#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orlicz/numerics.hpp"

namespace orlicz {

namespace {
constexpr double kQuadTol = 1e-11;
constexpr long kQuadCap = 1L << 22;
constexpr double kRootTol = 1e-10;
constexpr int kRootCap = 200;
constexpr double kResidualTol = 1e-8;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
} // namespace

namespace detail {

TorusSampleCache::TorusSampleCache(const TrigPoly& f) : f_(f) {
    const long band = 2L * f.degree() + 1;
    n0_ = band * std::max<long>(8, (256 + band - 1) / band);
}

const std::vector<double>& TorusSampleCache::level(int k) {
    while (static_cast<int>(levels_.size()) <= k) {
        const int lv = static_cast<int>(levels_.size());
        std::vector<double> s;
        if (lv == 0) {
            s.resize(static_cast<size_t>(n0_));
            for (long i = 0; i < n0_; ++i)
                s[static_cast<size_t>(i)] =
                    std::abs(f_.evaluate(kTwoPi * static_cast<double>(i) / static_cast<double>(n0_)));
        } else {
            const long m = n0_ << (lv - 1);
            s.resize(static_cast<size_t>(m));
            for (long i = 0; i < m; ++i)
                s[static_cast<size_t>(i)] = std::abs(
                    f_.evaluate(kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(m)));
        }
        levels_.push_back(std::move(s));
    }
    return levels_[static_cast<size_t>(k)];
}

double TorusSampleCache::max_abs() {
    const auto& s = level(0);
    return *std::max_element(s.begin(), s.end());
}

ModularValue cached_modular(const NFunction& nf, TorusSampleCache& cache, double lambda) {
    const double q = 1.0 + nf.kink_order();
    auto level_sum = [&](int k) {
        const auto& s = cache.level(k);
        double acc = 0.0;
        for (double v : s)
            acc += nf.value(v / lambda);
        return acc;
    };
    const QuadResult r =
        orlicz::detail::periodic_mean_engine(level_sum, cache.base_count(), q, kQuadTol, kQuadCap);
    return {r.value, r.points};
}

} // namespace detail

ModularValue continuous_modular(const NFunction& nf, const TrigPoly& f, double lambda) {
    if (!(lambda > 0.0))
        throw ParameterError("modular requires lambda > 0");
    detail::TorusSampleCache cache(f);
    return detail::cached_modular(nf, cache, lambda);
}

namespace {

// Shared bisection on a decreasing modular map. `modular` must return M(lambda).
template <class Modular>
NormResult norm_from_modular(Modular&& modular, double lambda0, long points_hint) {
    NormResult res;
    const RootResult root = solve_monotone([&](double l) { return modular(l); }, 1.0, lambda0,
                                           kRootTol, kRootCap, /*increasing=*/false);
    res.value = root.x;
    res.bracket_width = root.bracket_width / std::max(root.x, 1e-300);
    res.modular_residual = std::abs(modular(root.x) - 1.0);
    res.points = points_hint;
    res.converged = res.bracket_width <= 4.0 * kRootTol && res.modular_residual <= kResidualTol;
    return res;
}

} // namespace

NormResult luxemburg_norm_continuous(const NFunction& nf, const TrigPoly& f) {
    if (f.is_zero())
        return {0.0, 0.0, 0.0, 0, true};
    detail::TorusSampleCache cache(f);
    const double lambda0 = cache.max_abs();
    long points = 0;
    auto modular = [&](double l) {
        const ModularValue m = detail::cached_modular(nf, cache, l);
        points = std::max(points, m.points);
        return m.value;
    };
    NormResult res = norm_from_modular(modular, lambda0, 0);
    res.points = points;
    return res;
}

namespace {

NormResult discrete_norm(const NFunction& nf, std::span<const Complex> samples, double prefactor) {
    std::vector<double> mags(samples.size());
    double vmax = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        mags[i] = std::abs(samples[i]);
        vmax = std::max(vmax, mags[i]);
    }
    if (vmax == 0.0)
        return {0.0, 0.0, 0.0, static_cast<long>(samples.size()), true};
    auto modular = [&](double l) {
        double acc = 0.0;
        for (double v : mags)
            acc += nf.value(v / l);
        return prefactor * acc;
    };
    return norm_from_modular(modular, vmax, static_cast<long>(samples.size()));
}

} // namespace

NormResult discrete_norm_ln(const NFunction& nf, std::span<const Complex> samples) {
    if (samples.empty())
        throw ParameterError("discrete norm needs at least one sample");
    return discrete_norm(nf, samples, 1.0);
}

NormResult discrete_norm_omega(const NFunction& nf, std::span<const Complex> samples, int n) {
    if (samples.size() != 2 * static_cast<size_t>(n) + 1)
        throw ParameterError("omega_n norm expects exactly 2n+1 samples");
    return discrete_norm(nf, samples, 1.0 / (2.0 * n + 1.0));
}

} // namespace orlicz
