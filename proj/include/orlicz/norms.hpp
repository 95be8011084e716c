#pragma once

#include <span>

#include "orlicz/nfunction.hpp"
#include "orlicz/trigpoly.hpp"

namespace orlicz {

/// A computed Luxemburg norm together with its convergence evidence.
struct NormResult {
    double value = 0.0;            ///< lambda* with modular(lambda*) = 1
    double modular_residual = 0.0; ///< |M(lambda*) - 1|
    double bracket_width = 0.0;    ///< final bisection bracket, relative to value
    long points = 0;               ///< quadrature points (continuous) or samples (discrete)
    bool converged = false;        ///< bracket closed and residual <= 1e-8
};

/// (1/2pi) int_T phi(|f(x)| / lambda) dx; `points` reports the final grid.
struct ModularValue {
    double value = 0.0;
    long points = 0;
};
ModularValue continuous_modular(const NFunction& nf, const TrigPoly& f, double lambda);

/// ||f||_{L^phi}: root of the strictly decreasing map lambda -> modular.
NormResult luxemburg_norm_continuous(const NFunction& nf, const TrigPoly& f);

/// ||.||_{ell_n^phi}: sum_k phi(|v_k|/lambda) <= 1.
NormResult discrete_norm_ln(const NFunction& nf, std::span<const Complex> samples);

/// ||.||_{L^phi(omega_n)}: (1/(2n+1)) sum_k phi(|v_k|/lambda) <= 1.
NormResult discrete_norm_omega(const NFunction& nf, std::span<const Complex> samples, int n);

namespace detail {

/// Lazily built |f| samples on the doubling torus grids. Level 0 holds n0
/// points aligned with the Marcinkiewicz nodes (n0 a multiple of 2n+1) so the
/// zeros of structured kernels land on grid points; level k holds the
/// midpoints that refine level k-1.
class TorusSampleCache {
public:
    explicit TorusSampleCache(const TrigPoly& f);
    long base_count() const { return n0_; }
    const std::vector<double>& level(int k);
    double max_abs();

private:
    const TrigPoly& f_;
    long n0_;
    std::vector<std::vector<double>> levels_;
};

/// Modular evaluated through the cache; shared by the norm bisection so |f|
/// is sampled once per grid level across all lambda iterates.
ModularValue cached_modular(const NFunction& nf, TorusSampleCache& cache, double lambda);

} // namespace detail

} // namespace orlicz
