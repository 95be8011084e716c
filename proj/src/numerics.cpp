#include "orlicz/numerics.hpp"

#include <algorithm>
#include <numbers>

namespace orlicz {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<size_t>(n));
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        g[static_cast<size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

RootResult solve_monotone(const std::function<double(double)>& fn, double target, double start,
                          double rel_tol, int max_iter, bool increasing) {
    const double sign = increasing ? 1.0 : -1.0;
    auto residual = [&](double x) { return sign * (fn(x) - target); };

    double lo = start, hi = start;
    double r = residual(start);
    int used = 0;
    if (r < 0.0) {
        // value below target: grow
        do {
            lo = hi;
            hi *= 2.0;
            if (!(hi < 1e300) || ++used > 1100)
                throw ConvergenceError("solve_monotone: no upper bracket");
        } while (residual(hi) < 0.0);
    } else if (r > 0.0) {
        do {
            hi = lo;
            lo /= 2.0;
            if (!(lo > 1e-300) || ++used > 1100)
                throw ConvergenceError("solve_monotone: no lower bracket");
        } while (residual(lo) > 0.0);
    } else {
        return {start, 0.0, used};
    }

    // invariant: residual(lo) <= 0 <= residual(hi) in the transformed sign
    int it = 0;
    while (hi - lo > rel_tol * std::max(std::abs(lo), 1e-300)) {
        if (++it > max_iter)
            throw ConvergenceError("solve_monotone: iteration cap exceeded");
        const double mid = 0.5 * (lo + hi);
        if (residual(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return {0.5 * (lo + hi), hi - lo, it};
}

QuadResult periodic_mean(const std::function<double(double)>& g, long n0, double q, double tol,
                         long cap) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    auto level_sum = [&](int level) {
        double s = 0.0;
        if (level == 0) {
            for (long i = 0; i < n0; ++i)
                s += g(two_pi * static_cast<double>(i) / static_cast<double>(n0));
        } else {
            const long m = n0 << (level - 1);
            for (long i = 0; i < m; ++i)
                s += g(two_pi * (static_cast<double>(i) + 0.5) / static_cast<double>(m));
        }
        return s;
    };
    return detail::periodic_mean_engine(level_sum, n0, q, tol, cap);
}

QuadResult integrate_log(const std::function<double(double)>& fn, double r_lo, double r_hi,
                         double rel_tol, long cap) {
    if (!(r_hi > r_lo))
        return {0.0, 0};
    const double u_lo = std::log(r_lo);
    const double u_hi = std::log(r_hi);
    auto h = [&](double u) {
        const double r = std::exp(u);
        return fn(r) * r;
    };

    long n = 64; // panels, even
    const double du0 = (u_hi - u_lo) / static_cast<double>(n);
    double end_sum = h(u_lo) + h(u_hi);
    double odd_sum = 0.0;  // values at odd multiples of the current step
    double even_sum = 0.0; // interior values at even multiples
    for (long i = 1; i < n; i += 2)
        odd_sum += h(u_lo + du0 * static_cast<double>(i));
    for (long i = 2; i < n; i += 2)
        even_sum += h(u_lo + du0 * static_cast<double>(i));

    double prev = (u_hi - u_lo) / (3.0 * static_cast<double>(n)) *
                  (end_sum + 4.0 * odd_sum + 2.0 * even_sum);
    for (;;) {
        if (2 * n > cap)
            throw ConvergenceError("integrate_log: panel cap reached before stabilization");
        even_sum += odd_sum;
        odd_sum = 0.0;
        n *= 2;
        const double du = (u_hi - u_lo) / static_cast<double>(n);
        for (long i = 1; i < n; i += 2)
            odd_sum += h(u_lo + du * static_cast<double>(i));
        const double cur = (u_hi - u_lo) / (3.0 * static_cast<double>(n)) *
                           (end_sum + 4.0 * odd_sum + 2.0 * even_sum);
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur) + 1e-300)
            return {cur, n};
        prev = cur;
    }
}

} // namespace orlicz
