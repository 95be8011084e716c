#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

enum class Family { power, power_log, power_log_log, custom };

/// Converts between the family tag and its config-file name.
std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// An Orlicz generator phi(t) = int_0^t phi'(s) ds given by a closed-form
/// catalogue family or a user-supplied value/density pair.
///
/// Construction validates on a log grid that phi is finite and the density is
/// non-decreasing; with `normalize` the values are rescaled so phi(1) = 1.
/// Instances are immutable and safe to share between threads.
class NFunction {
public:
    static NFunction make(Family family, double alpha, double beta = 0.0, double gamma = 0.0,
                          bool normalize = true);
    static NFunction make_custom(std::function<double(double)> value,
                                 std::function<double(double)> density, bool normalize = true,
                                 std::string label = "custom");

    double value(double t) const;     ///< phi(t)
    double density(double t) const;   ///< phi'(t)
    double inverse(double y) const;   ///< phi^{-1}(y), exact inverse by bisection
    double conjugate(double s) const; ///< phi*(s) = sup_t (s t - phi(t))

    Family family() const { return family_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    bool normalized() const { return normalized_; }
    double norm_scale() const { return scale_; }
    const std::string& label() const { return label_; }

    /// Local power of phi at 0+ (chord slope at the bottom of the validation
    /// range), clamped to [1, 3]. Quadratures integrating phi(|f|) use
    /// 1 + kink_order() as their Richardson exponent.
    double kink_order() const { return kink_order_; }

private:
    NFunction() = default;
    void validate_and_normalize(bool normalize);
    double raw_value(double t) const;
    double raw_density(double t) const;

    Family family_ = Family::custom;
    double alpha_ = 0.0, beta_ = 0.0, gamma_ = 0.0;
    double scale_ = 1.0;
    bool normalized_ = false;
    double kink_order_ = 1.0;
    std::string label_;
    std::function<double(double)> custom_value_, custom_density_;
};

/// sup over a log grid of phi(2t)/phi(t).
struct Delta2Result {
    double value = 0.0;
    double argmax_t = 0.0;
    bool non_delta2 = false; ///< the running sup still grows at the grid boundary
};
Delta2Result delta2_constant(const NFunction& nf);

enum class MultMode { super, sub };

/// Grid-empirical restricted multiplicativity constant: the smallest C >= 1
/// with phi(a)phi(b) <= phi(C a b) on every sampled admissible pair (super),
/// or the largest C <= 1 with the reverse inequality (sub). Admissible means
/// a < 1 <= a b < b.
struct MultiplicativityCertificate {
    MultMode mode = MultMode::super;
    double constant = 1.0;
    double witness_a = 0.0; ///< pair attaining the extreme constant
    double witness_b = 0.0;
    double margin = 0.0; ///< worst residual of the certified inequality at `constant`
    std::string grid;
};
MultiplicativityCertificate multiplicativity_constant(const NFunction& nf, MultMode mode);

/// Matuszewska-Orlicz indices at infinity, estimated from the growth of
/// h(t) = sup { phi(ts)/phi(s) : s >= max(1, 1/t) } with a two-point
/// Richardson step that cancels slowly-varying (log-type) corrections.
struct IndexEstimate {
    double alpha_index = 0.0;
    double beta_index = 0.0;
    double t_lo = 0.0, t_hi = 0.0;   ///< extreme t values evaluated
    double alpha_residual = 0.0;     ///< |extrapolated - raw| disagreement
    double beta_residual = 0.0;
};
IndexEstimate matuszewska_indices(const NFunction& nf);

/// Worst-ratio report for the weak-type interpolation conditions.
struct ConditionReport {
    double sup_ratio = 0.0; ///< sup over the s grid of R(s)/sigma (resp. /gamma^p)
    double worst_s = 0.0;
    bool holds = false; ///< sup_ratio <= 1 + 1e-6
    double max_remainder = 0.0; ///< largest truncation remainder, relative to its integral
};

/// (sigma s / phi(sigma s)) * int_0^s phi(r)/r^2 dr <= sigma for all s.
ConditionReport check_small_condition(const NFunction& nf, double sigma);
/// ((gamma s)^p / phi(gamma s)) * int_s^inf phi(r)/r^{p+1} dr <= gamma^p for all s.
ConditionReport check_big_condition(const NFunction& nf, double gamma, double p);

/// int_0^x phi(r)/r^2 dr with certified lower truncation; shared by the
/// condition checks and the Dirichlet-kernel bracket.
double power_weighted_integral(const NFunction& nf, double x, double* remainder_rel = nullptr);

} // namespace orlicz
