#pragma once

#include <cstdint>
#include <vector>

#include "orlicz/nfunction.hpp"

namespace orlicz {

/// inf over a log x-grid on (1/t, 1e8/t] of Psi(tx)/Psi(x). `stabilized` is
/// false when the running inf was still decreasing at the grid end, the
/// telltale of a trivial sampling space.
struct RawBound {
    double value = 0.0;
    bool stabilized = true;
};
RawBound raw_sampling_bound(const NFunction& psi, double t, int x_points = 300);

/// sup-variant of the same scan.
RawBound raw_interpolating_bound(const NFunction& psi, double t, int x_points = 300);

/// Raw bound values on a t-grid together with their convex hull.
struct EnvelopeTable {
    std::vector<double> t;
    std::vector<double> raw;
    std::vector<double> envelope;
    std::vector<std::size_t> hull;     ///< vertex indices into t
    std::vector<std::uint8_t> stabilized;
    bool sup_variant = false;
    bool non_canonical = false; ///< upper hull is a candidate majorant only
};

/// Greatest convex minorant of the raw inf-bound on a log t-grid in (0, 1];
/// the hull is taken in linear (t, value) coordinates.
EnvelopeTable sampling_function(const NFunction& psi, double t_lo = 1e-6, double t_hi = 1.0,
                                int t_points = 200, int x_points = 300);

/// sup-variant with the upper hull; flagged non-canonical since the smallest
/// convex majorant need not exist.
EnvelopeTable interpolating_bound(const NFunction& psi, double t_lo = 1e-6, double t_hi = 1.0,
                                  int t_points = 200, int x_points = 300);

/// log-log slope of the raw bound as t -> 0, two-pair Richardson step on
/// t in {1e-4, 1e-5, 1e-6} cancelling a c/log(t) correction.
struct SlopeEstimate {
    double value = 0.0;
    double residual = 0.0; ///< |extrapolated - rawest two-point slope|
};
SlopeEstimate loglog_slope_at_zero(const NFunction& psi, int x_points = 300);

/// Reference closed forms of the sampling function for comparison:
/// t^alpha for powers, t^alpha log^{-beta}(1 + 1/t) (etc.) for log families.
/// Returns false if the family has no catalogued closed form.
bool sampling_closed_form(const NFunction& psi, double t, double* out);

} // namespace orlicz
