#include "orlicz/nfunction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "orlicz/numerics.hpp"

namespace orlicz {

namespace {

constexpr double kValidateLo = 1e-8;
constexpr double kValidateHi = 1e8;
constexpr int kValidatePoints = 321;
constexpr double kBisectTol = 1e-10;
constexpr int kBisectCap = 200;
constexpr double kConditionTol = 1e-6;

std::string format_param(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
    case Family::power: return "power";
    case Family::power_log: return "power_log";
    case Family::power_log_log: return "power_log_log";
    case Family::custom: return "custom";
    }
    return "custom";
}

Family family_from_name(const std::string& name) {
    if (name == "power") return Family::power;
    if (name == "power_log") return Family::power_log;
    if (name == "power_log_log") return Family::power_log_log;
    if (name == "custom") return Family::custom;
    throw ParameterError("unknown N-function family: " + name);
}

double NFunction::raw_value(double t) const {
    if (t == 0.0)
        return 0.0;
    switch (family_) {
    case Family::power:
        return std::pow(t, alpha_);
    case Family::power_log:
        return std::pow(t, alpha_) * std::pow(std::log1p(t), beta_);
    case Family::power_log_log: {
        const double l = std::log1p(t);
        return std::pow(t, alpha_) * std::pow(l, beta_) * std::pow(std::log1p(l), gamma_);
    }
    case Family::custom:
        return custom_value_(t);
    }
    return 0.0;
}

double NFunction::raw_density(double t) const {
    if (t == 0.0)
        return 0.0;
    switch (family_) {
    case Family::power:
        return alpha_ * std::pow(t, alpha_ - 1.0);
    case Family::power_log: {
        const double l = std::log1p(t);
        return std::pow(t, alpha_ - 1.0) * std::pow(l, beta_ - 1.0) *
               (alpha_ * l + beta_ * t / (1.0 + t));
    }
    case Family::power_log_log: {
        const double l = std::log1p(t);
        const double m = std::log1p(l);
        return std::pow(t, alpha_ - 1.0) * std::pow(l, beta_ - 1.0) * std::pow(m, gamma_ - 1.0) *
               (alpha_ * l * m + beta_ * t * m / (1.0 + t) +
                gamma_ * t * l / ((1.0 + t) * (1.0 + l)));
    }
    case Family::custom:
        return custom_density_(t);
    }
    return 0.0;
}

void NFunction::validate_and_normalize(bool normalize) {
    const auto grid = log_grid(kValidateLo, kValidateHi, kValidatePoints);
    double prev_density = 0.0;
    for (double t : grid) {
        const double v = raw_value(t);
        const double d = raw_density(t);
        if (!std::isfinite(v) || !std::isfinite(d) || v < 0.0 || d < 0.0)
            throw ParameterError(label_ + ": phi or its density is not finite/non-negative at t=" +
                                 format_param(t));
        if (d < prev_density * (1.0 - 1e-12))
            throw ParameterError(label_ + ": density is not non-decreasing near t=" +
                                 format_param(t));
        prev_density = d;
    }
    if (normalize) {
        const double v1 = raw_value(1.0);
        if (!(v1 > 0.0) || !std::isfinite(v1))
            throw ParameterError(label_ + ": cannot normalize, phi(1) is not positive finite");
        scale_ = 1.0 / v1;
        normalized_ = true;
    }
    kink_order_ = std::clamp(
        std::log2(raw_value(2.0 * kValidateLo) / raw_value(kValidateLo)), 1.0, 3.0);
}

NFunction NFunction::make(Family family, double alpha, double beta, double gamma, bool normalize) {
    if (family == Family::custom)
        throw ParameterError("use make_custom for the custom family");
    if (!(alpha > 0.0))
        throw ParameterError("alpha must be positive");
    if ((family == Family::power_log || family == Family::power_log_log) && !(alpha > 1.0))
        throw ParameterError("log families require alpha > 1");

    NFunction nf;
    nf.family_ = family;
    nf.alpha_ = alpha;
    nf.beta_ = beta;
    nf.gamma_ = gamma;
    switch (family) {
    case Family::power:
        nf.label_ = "power(" + format_param(alpha) + ")";
        break;
    case Family::power_log:
        nf.label_ = "power_log(" + format_param(alpha) + ";" + format_param(beta) + ")";
        break;
    default:
        nf.label_ = "power_log_log(" + format_param(alpha) + ";" + format_param(beta) + ";" +
                    format_param(gamma) + ")";
        break;
    }
    nf.validate_and_normalize(normalize);
    return nf;
}

NFunction NFunction::make_custom(std::function<double(double)> value,
                                 std::function<double(double)> density, bool normalize,
                                 std::string label) {
    NFunction nf;
    nf.family_ = Family::custom;
    nf.custom_value_ = std::move(value);
    nf.custom_density_ = std::move(density);
    nf.label_ = std::move(label);
    nf.validate_and_normalize(normalize);
    return nf;
}

double NFunction::value(double t) const { return scale_ * raw_value(t); }

double NFunction::density(double t) const { return scale_ * raw_density(t); }

double NFunction::inverse(double y) const {
    if (y == 0.0)
        return 0.0;
    if (!(y > 0.0) || !std::isfinite(y))
        throw ParameterError(label_ + ": inverse of a non-finite or negative value");
    return solve_monotone([this](double t) { return value(t); }, y, 1.0, kBisectTol, kBisectCap,
                          /*increasing=*/true)
        .x;
}

double NFunction::conjugate(double s) const {
    if (s == 0.0)
        return 0.0;
    if (!(s > 0.0) || !std::isfinite(s))
        throw ParameterError(label_ + ": conjugate of a non-finite or negative value");
    const double t = solve_monotone([this](double u) { return density(u); }, s, 1.0, kBisectTol,
                                    kBisectCap, /*increasing=*/true)
                         .x;
    return s * t - value(t);
}

Delta2Result delta2_constant(const NFunction& nf) {
    const auto grid = log_grid(kValidateLo, kValidateHi, 401);
    Delta2Result res;
    std::vector<double> ratios;
    ratios.reserve(grid.size());
    size_t argmax = 0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const double lo = nf.value(grid[i]);
        const double hi = nf.value(2.0 * grid[i]);
        double r;
        if (!(lo > 0.0) || !std::isfinite(hi)) {
            res.non_delta2 = true;
            r = 0.0;
        } else {
            r = hi / lo;
        }
        ratios.push_back(r);
        if (r > res.value) {
            res.value = r;
            res.argmax_t = grid[i];
            argmax = i;
        }
    }
    // sup pinned to the upper boundary and still climbing: likely unbounded
    if (argmax + 25 >= ratios.size() && ratios.back() >= ratios[ratios.size() - 2])
        res.non_delta2 = true;
    return res;
}

namespace {

// c(a, b) = phi^{-1}(phi(a) phi(b)) / (a b); the certificate constant is its
// extreme value over the admissible region a < 1 <= ab < b.
double pair_constant(const NFunction& nf, double a, double b) {
    return nf.inverse(nf.value(a) * nf.value(b)) / (a * b);
}

} // namespace

MultiplicativityCertificate multiplicativity_constant(const NFunction& nf, MultMode mode) {
    if (std::abs(nf.value(1.0) - 1.0) > 1e-9)
        throw ParameterError("multiplicativity_constant requires a normalized N-function");

    constexpr int kSide = 220;
    constexpr double kALo = 1e-6, kBHi = 1e6;
    const bool super = (mode == MultMode::super);

    double best = super ? -std::numeric_limits<double>::infinity()
                        : std::numeric_limits<double>::infinity();
    double best_a = 0.0, best_b = 0.0;
    auto consider = [&](double a, double b) {
        const double c = pair_constant(nf, a, b);
        if (super ? (c > best) : (c < best)) {
            best = c;
            best_a = a;
            best_b = b;
        }
    };

    const double log_b_hi = std::log(kBHi);
    for (int j = 1; j <= kSide; ++j) {
        const double b = std::exp(log_b_hi * j / kSide);
        const double a_lo = std::max(kALo, 1.0 / b);
        const double log_a_lo = std::log(a_lo);
        for (int i = 0; i < kSide; ++i)
            consider(std::exp(log_a_lo * (kSide - i) / kSide), b);
    }

    // local refinement around the grid extremum, in log coordinates
    double half_a = std::log(kBHi) / kSide;
    double half_b = half_a;
    for (int round = 0; round < 6; ++round) {
        const double ca = std::log(best_a), cb = std::log(best_b);
        for (int i = -8; i <= 8; ++i) {
            for (int j = -8; j <= 8; ++j) {
                const double a = std::exp(ca + half_a * i / 8.0);
                const double b = std::exp(cb + half_b * j / 8.0);
                if (a >= kALo && a < 1.0 && b > 1.0 && b <= kBHi && a * b >= 1.0)
                    consider(a, b);
            }
        }
        half_a /= 4.0;
        half_b /= 4.0;
    }

    MultiplicativityCertificate cert;
    cert.mode = mode;
    cert.witness_a = best_a;
    cert.witness_b = best_b;
    cert.grid = "a in [1e-06,1) x b in (1,1e+06], 220x220 log pairs + local refinement";
    if (super) {
        if (best > 1e6)
            throw NoCertificateError(nf.label() + ": no supermultiplicativity constant in [1,1e6]");
        cert.constant = std::max(1.0, best);
    } else {
        if (best < 1e-6)
            throw NoCertificateError(nf.label() + ": no submultiplicativity constant in [1e-6,1]");
        cert.constant = std::min(1.0, best);
    }

    double margin = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= kSide; ++j) {
        const double b = std::exp(log_b_hi * j / kSide);
        const double a_lo = std::max(kALo, 1.0 / b);
        const double log_a_lo = std::log(a_lo);
        for (int i = 0; i < kSide; ++i) {
            const double a = std::exp(log_a_lo * (kSide - i) / kSide);
            const double gap = super ? nf.value(cert.constant * a * b) - nf.value(a) * nf.value(b)
                                     : nf.value(a) * nf.value(b) - nf.value(cert.constant * a * b);
            margin = std::min(margin, gap);
        }
    }
    cert.margin = margin;
    return cert;
}

namespace {

// log h(t) / log t with h(t) = sup over a 400-point log s-grid on
// [max(1, 1/t), 1e8] of phi(ts)/phi(s).
double index_slope(const NFunction& nf, double t) {
    const auto grid = log_grid(std::max(1.0, 1.0 / t), 1e8, 400);
    double h = 0.0;
    for (double s : grid)
        h = std::max(h, nf.value(t * s) / nf.value(s));
    return std::log(h) / std::log(t);
}

// Error shape of the slope when the sup sits at the grid edge and phi carries
// a slowly varying log factor; exact for the power_log family, zero effect on
// pure powers.
double edge_shape_small_t(double t) {
    constexpr double kSHi = 1e8;
    return std::log(std::log1p(t * kSHi) / std::log1p(kSHi)) / std::log(t);
}

double edge_shape_large_t(double t) {
    return std::log(std::log1p(t) / std::log1p(1.0)) / std::log(t);
}

double richardson_pair(double s1, double g1, double s2, double g2) {
    return (s1 * g2 - s2 * g1) / (g2 - g1);
}

} // namespace

IndexEstimate matuszewska_indices(const NFunction& nf) {
    IndexEstimate est;
    est.t_lo = 1e-6;
    est.t_hi = 1e6;

    const double sa1 = index_slope(nf, 1e-5);
    const double sa2 = index_slope(nf, 1e-6);
    est.alpha_index = richardson_pair(sa1, edge_shape_small_t(1e-5), sa2, edge_shape_small_t(1e-6));
    est.alpha_residual = std::abs(est.alpha_index - sa2);

    const double sb1 = index_slope(nf, 1e5);
    const double sb2 = index_slope(nf, 1e6);
    est.beta_index = richardson_pair(sb1, edge_shape_large_t(1e5), sb2, edge_shape_large_t(1e6));
    est.beta_residual = std::abs(est.beta_index - sb2);
    return est;
}

double power_weighted_integral(const NFunction& nf, double x, double* remainder_rel) {
    const double r_min = x * 1e-12;
    // chord slope just above the truncation point bounds phi from above below
    // it, provided the local log-log slope is non-increasing there
    const double slope = std::log2(nf.value(2.0 * r_min) / nf.value(r_min));
    if (!(slope > 1.0 + kConditionTol))
        throw ConvergenceError(nf.label() +
                               ": lower truncation cannot be certified (local slope <= 1)");
    const double remainder = nf.value(r_min) / (r_min * (slope - 1.0));
    const double main =
        integrate_log([&nf](double r) { return nf.value(r) / (r * r); }, r_min, x, 1e-11, 1 << 20)
            .value;
    if (remainder_rel)
        *remainder_rel = remainder / std::max(main, 1e-300);
    return main + remainder;
}

ConditionReport check_small_condition(const NFunction& nf, double sigma) {
    if (!(sigma > 0.0))
        throw ParameterError("sigma must be positive");
    ConditionReport rep;
    for (double s : log_grid(1e-6, 1e6, 400)) {
        double rem = 0.0;
        const double integral = power_weighted_integral(nf, s, &rem);
        const double ratio = s * integral / nf.value(sigma * s);
        rep.max_remainder = std::max(rep.max_remainder, rem);
        if (ratio > rep.sup_ratio) {
            rep.sup_ratio = ratio;
            rep.worst_s = s;
        }
    }
    rep.holds = rep.sup_ratio <= 1.0 + kConditionTol;
    return rep;
}

ConditionReport check_big_condition(const NFunction& nf, double gamma, double p) {
    if (!(gamma > 0.0) || !(p > 1.0))
        throw ParameterError("big condition requires gamma > 0 and p > 1");
    ConditionReport rep;
    for (double s : log_grid(1e-6, 1e6, 400)) {
        const double r_max = std::max(s, 1.0) * 1e12;
        const double tail_slope = std::log2(nf.value(r_max) / nf.value(r_max / 2.0));
        if (!(tail_slope < p - kConditionTol))
            throw ConvergenceError(nf.label() +
                                   ": tail cannot be certified (local slope >= p)");
        const double remainder = nf.value(r_max) / (std::pow(r_max, p) * (p - tail_slope));
        const double main = integrate_log(
                                [&](double r) { return nf.value(r) / std::pow(r, p + 1.0); }, s,
                                r_max, 1e-11, 1 << 20)
                                .value;
        const double integral = main + remainder;
        const double ratio = std::pow(s, p) * integral / nf.value(gamma * s);
        rep.max_remainder = std::max(rep.max_remainder, remainder / std::max(main, 1e-300));
        if (ratio > rep.sup_ratio) {
            rep.sup_ratio = ratio;
            rep.worst_s = s;
        }
    }
    rep.holds = rep.sup_ratio <= 1.0 + kConditionTol;
    return rep;
}

} // namespace orlicz
