#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

/// Result of a 1-d root search on a monotone function.
struct RootResult {
    double x = 0.0;             ///< midpoint of the final bracket
    double bracket_width = 0.0; ///< final hi - lo
    int iterations = 0;
};

/// Result of an adaptive quadrature.
struct QuadResult {
    double value = 0.0;
    long points = 0;
};

/// n log-spaced points on [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, int n);

/// Solves fn(x) = target for a monotone fn on (0, inf).
///
/// The bracket is grown/shrunk by doubling/halving from `start`, then refined
/// by bisection until the bracket width is below rel_tol relative to x.
/// Throws ConvergenceError if no bracket is found or `max_iter` is exceeded.
RootResult solve_monotone(const std::function<double(double)>& fn, double target, double start,
                          double rel_tol, int max_iter, bool increasing);

namespace detail {

// Trapezoid-with-doubling on a periodic mean (1/2pi) * int_0^{2pi} g, with one
// Richardson level of exponent q on the doubled sequence. `level_sum(k)` must
// return the sum of g over the points that are new at level k:
//   level 0: x = 2pi*i/n0,            i = 0..n0-1
//   level k: x = 2pi*(i+1/2)/(n0*2^(k-1)), i = 0..n0*2^(k-1)-1
template <class LevelSum>
QuadResult periodic_mean_engine(LevelSum&& level_sum, long n0, double q, double tol, long cap) {
    double total = level_sum(0);
    long n = n0;
    double t_prev = total / static_cast<double>(n);
    const double w = std::pow(2.0, q) - 1.0;
    double s_prev = 0.0;
    bool have_s = false;
    for (int level = 1;; ++level) {
        if (2 * n > cap)
            throw ConvergenceError("periodic quadrature: point cap reached before stabilization");
        total += level_sum(level);
        n *= 2;
        const double t_cur = total / static_cast<double>(n);
        const double s_cur = t_cur + (t_cur - t_prev) / w;
        if (have_s) {
            const double diff = std::abs(s_cur - s_prev);
            if (diff <= tol * std::max(1.0, std::abs(s_cur)))
                return {s_cur, n};
        }
        // band-limited integrands stop changing once n exceeds the bandwidth
        if (t_cur == t_prev)
            return {t_cur, n};
        s_prev = s_cur;
        have_s = true;
        t_prev = t_cur;
    }
}

} // namespace detail

/// (1/2pi) * int_0^{2pi} g(x) dx for a 2pi-periodic g.
///
/// q is the Richardson exponent used on the doubling sequence; 2 is the safe
/// default, callers integrating phi(|f|) pass 1 + (local power of phi at 0)
/// so the kink contribution of |f|'s zeros is cancelled.
QuadResult periodic_mean(const std::function<double(double)>& g, long n0, double q, double tol,
                         long cap);

/// int_{r_lo}^{r_hi} fn(r) dr via composite Simpson in u = log r, doubling the
/// panel count until successive values agree to rel_tol.
QuadResult integrate_log(const std::function<double(double)>& fn, double r_lo, double r_hi,
                         double rel_tol, long cap);

} // namespace orlicz
