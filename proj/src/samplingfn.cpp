#include "orlicz/samplingfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orlicz/numerics.hpp"

namespace orlicz {

namespace {

constexpr double kXSpan = 1e8; // x ranges over (1/t, kXSpan/t]

RawBound scan_bound(const NFunction& psi, double t, int x_points, bool sup) {
    if (!(t > 0.0) || t > 1.0)
        throw ParameterError("sampling bound requires 0 < t <= 1");
    if (x_points < 2)
        throw ParameterError("x grid needs at least 2 points");
    RawBound rb;
    rb.value = sup ? 0.0 : std::numeric_limits<double>::infinity();
    const double log_span = std::log(kXSpan);
    int arg = 0;
    for (int j = 1; j <= x_points; ++j) {
        const double x = std::exp(log_span * j / x_points) / t;
        const double r = psi.value(t * x) / psi.value(x);
        if (sup ? r > rb.value : r < rb.value) {
            rb.value = r;
            arg = j;
        }
    }
    // extreme pinned to the far end of the grid: still improving at X_max
    rb.stabilized = !(arg == x_points);
    return rb;
}

// Andrew monotone chain, one side. keep_lower keeps the hull from below.
std::vector<std::size_t> half_hull(const std::vector<double>& xs, const std::vector<double>& ys,
                                   bool keep_lower) {
    std::vector<std::size_t> h;
    auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
        return (xs[a] - xs[o]) * (ys[b] - ys[o]) - (ys[a] - ys[o]) * (xs[b] - xs[o]);
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
        while (h.size() >= 2) {
            const double c = cross(h[h.size() - 2], h.back(), i);
            if (keep_lower ? c <= 0.0 : c >= 0.0)
                h.pop_back();
            else
                break;
        }
        h.push_back(i);
    }
    return h;
}

EnvelopeTable build_table(const NFunction& psi, double t_lo, double t_hi, int t_points,
                          int x_points, bool sup) {
    if (!(t_lo > 0.0) || !(t_hi <= 1.0) || !(t_lo < t_hi))
        throw ParameterError("t grid must satisfy 0 < t_lo < t_hi <= 1");
    if (t_points < 2)
        throw ParameterError("t grid needs at least 2 points");
    EnvelopeTable tab;
    tab.sup_variant = sup;
    tab.non_canonical = sup;
    tab.t = log_grid(t_lo, t_hi, t_points);
    tab.raw.resize(tab.t.size());
    tab.stabilized.resize(tab.t.size());
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
        const RawBound rb = sup ? raw_interpolating_bound(psi, tab.t[i], x_points)
                                : raw_sampling_bound(psi, tab.t[i], x_points);
        tab.raw[i] = rb.value;
        tab.stabilized[i] = rb.stabilized ? 1 : 0;
    }
    tab.hull = half_hull(tab.t, tab.raw, /*keep_lower=*/!sup);

    // the chain always retains both endpoints, so every index sits in a segment
    tab.envelope.resize(tab.t.size());
    std::size_t seg = 0;
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
        while (seg + 2 < tab.hull.size() && tab.hull[seg + 1] < i)
            ++seg;
        const std::size_t a = tab.hull[seg];
        const std::size_t b = tab.hull[seg + 1];
        if (i == a || i == b) {
            tab.envelope[i] = tab.raw[i]; // vertices keep the raw value bit-exactly
        } else {
            const double w = (tab.t[i] - tab.t[a]) / (tab.t[b] - tab.t[a]);
            tab.envelope[i] = tab.raw[a] + w * (tab.raw[b] - tab.raw[a]);
        }
    }
    return tab;
}

} // namespace

RawBound raw_sampling_bound(const NFunction& psi, double t, int x_points) {
    return scan_bound(psi, t, x_points, /*sup=*/false);
}

RawBound raw_interpolating_bound(const NFunction& psi, double t, int x_points) {
    return scan_bound(psi, t, x_points, /*sup=*/true);
}

EnvelopeTable sampling_function(const NFunction& psi, double t_lo, double t_hi, int t_points,
                                int x_points) {
    return build_table(psi, t_lo, t_hi, t_points, x_points, /*sup=*/false);
}

EnvelopeTable interpolating_bound(const NFunction& psi, double t_lo, double t_hi, int t_points,
                                  int x_points) {
    return build_table(psi, t_lo, t_hi, t_points, x_points, /*sup=*/true);
}

SlopeEstimate loglog_slope_at_zero(const NFunction& psi, int x_points) {
    const double t0 = 1e-4, t1 = 1e-5, t2 = 1e-6;
    const double v0 = raw_sampling_bound(psi, t0, x_points).value;
    const double v1 = raw_sampling_bound(psi, t1, x_points).value;
    const double v2 = raw_sampling_bound(psi, t2, x_points).value;
    const double s_a = std::log(v0 / v1) / std::log(t0 / t1);
    const double s_b = std::log(v1 / v2) / std::log(t1 / t2);
    // model slope(t) = s_inf + c / log(t) at the pair midpoints
    const double la = 0.5 * (std::log(t0) + std::log(t1));
    const double lb = 0.5 * (std::log(t1) + std::log(t2));
    SlopeEstimate est;
    est.value = (s_a * la - s_b * lb) / (la - lb);
    est.residual = std::abs(est.value - s_b);
    return est;
}

bool sampling_closed_form(const NFunction& psi, double t, double* out) {
    const double inv = 1.0 / t;
    switch (psi.family()) {
    case Family::power:
        *out = std::pow(t, psi.alpha());
        return true;
    case Family::power_log:
        *out = psi.beta() > 0.0
                   ? std::pow(t, psi.alpha()) * std::pow(std::log1p(inv), -psi.beta())
                   : std::pow(t, psi.alpha());
        return true;
    case Family::power_log_log: {
        if (psi.beta() <= 0.0) {
            *out = std::pow(t, psi.alpha());
            return true;
        }
        const double l = std::log1p(inv);
        *out = std::pow(t, psi.alpha()) * std::pow(l, -psi.beta()) *
               std::pow(std::log1p(l), -psi.gamma());
        return true;
    }
    case Family::custom:
        return false;
    }
    return false;
}

} // namespace orlicz
