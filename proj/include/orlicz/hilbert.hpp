#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orlicz/nfunction.hpp"
#include "orlicz/sampling.hpp"
#include "orlicz/trigpoly.hpp"

namespace orlicz {

/// ||D_n||_{L^phi} (Luxemburg norm of the n-th Dirichlet kernel).
double dirichlet_norm(const NFunction& nf, int n);

/// The three quantities of the Dirichlet-kernel bracket at a given lambda:
///   int_0^{3(2n+1)/(2 pi lambda)} phi(t)/(lambda t^2) dt
///     <= int_T phi(|D_n|/lambda) dx
///     <= 4 pi int_0^{(2n+1)/lambda} phi(2t)/(lambda t^2) dt.
/// The middle integral uses the full (un-normalized) torus measure.
struct DirichletLemmaBounds {
    double lower = 0.0;
    double middle = 0.0;
    double upper_4pi = 0.0;
    double upper_2pi = 0.0; ///< the sharper constant appearing in the proof
};
DirichletLemmaBounds dirichlet_lemma_bounds(const NFunction& nf, int n, double lambda);

/// Checks both bracket inequalities; the witness notes whether the 2pi
/// variant also held.
VerificationReport verify_dirichlet_lemma(const NFunction& nf, int n, double lambda);

/// Per-degree lambda_n = ||D_n||_{L^phi} with the bracket evaluated at each.
struct DirichletNormRow {
    int n = 0;
    double lambda = 0.0;
    DirichletLemmaBounds bounds;
};
std::vector<DirichletNormRow> dirichlet_norm_table(const NFunction& nf, int n_max);

/// lambda_n <= 4 pi lambda_{n+1} for all n < n_max.
VerificationReport verify_lambda_monotonicity(const NFunction& nf, int n_max);
VerificationReport verify_lambda_monotonicity(const NFunction& nf,
                                              std::span<const double> lambdas);

/// Family-sup lower bound on the operator norm of the Hilbert transform on
/// L^phi, with the maximizing witness.
struct HilbertNormEstimate {
    double value = 0.0;
    std::string witness;
};
HilbertNormEstimate estimate_hilbert_norm(const NFunction& nf, std::span<const int> degrees,
                                          int count, std::uint64_t seed);

/// sup_t t * |{|Hf| > t}| / ||f||_{L^1} with the normalized measure dx/2pi
/// on both sides; level sets are counted on a uniform grid.
struct WeakTypeResult {
    double value = 0.0;
    double measure_error = 0.0; ///< O(2pi/grid) bound on each level-set measure
};
WeakTypeResult weak_type_estimate(const TrigPoly& f, long grid_size);

/// ||project(g, n)|| <= ((1 + ||H||)/2)^2 ||g|| tested with a lower-bound
/// estimate of ||H||; bound violations are inconclusive rather than errors.
struct ProjectionBoundReport {
    int passed = 0;
    int inconclusive = 0;
    std::vector<VerificationReport> rows;
};
ProjectionBoundReport verify_projection_bound(const NFunction& nf,
                                              std::span<const TrigPoly> g_family, int n,
                                              double hnorm_estimate);

} // namespace orlicz
