#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orlicz/errors.hpp"

namespace orlicz {

using Complex = std::complex<double>;

/// A trigonometric polynomial sum_{k=-n}^{n} a_k e^{ikx} on the torus, stored
/// as the coefficient vector a_{-n..n}. Immutable value type.
class TrigPoly {
public:
    explicit TrigPoly(int degree) : n_(check_degree(degree)), a_(2 * size_t(degree) + 1) {}
    TrigPoly(int degree, std::vector<Complex> coeffs);

    int degree() const { return n_; }
    /// a_k for k in [-n, n]; 0 outside that range.
    Complex coeff(int k) const {
        return (k < -n_ || k > n_) ? Complex{} : a_[static_cast<size_t>(k + n_)];
    }
    void set_coeff(int k, Complex v);
    const std::vector<Complex>& coeffs() const { return a_; }

    /// f(x) by Horner recursion in e^{ix}.
    Complex evaluate(double x) const;

    bool is_zero() const;

private:
    static int check_degree(int n) {
        if (n < 0)
            throw ParameterError("polynomial degree must be non-negative");
        return n;
    }
    int n_;
    std::vector<Complex> a_;
};

/// The Marcinkiewicz grid x_{n,k} = 2pi(n+k)/(2n+1), k = -n..n, with the
/// uniform probability weight of omega_n.
struct NodeSet {
    int degree = 0;
    std::vector<double> x; ///< index k+n holds x_{n,k}
    double weight = 1.0;   ///< 1/(2n+1)
};
NodeSet nodes(int n);

/// The n-th Dirichlet kernel (all coefficients 1).
TrigPoly dirichlet(int n);

/// Degree-n polynomial taking value 1 at the nodes indexed by `node_indices`
/// (values k in [-n, n]) and 0 at the remaining nodes.
TrigPoly spike_poly(int n, std::span<const int> node_indices);

/// Fourier multiplier -i sgn(k).
TrigPoly hilbert_transform(const TrigPoly& f);

/// Partial sum: truncates coefficients to |k| <= n. When n >= degree(f) the
/// operator is the identity and f is returned unchanged.
TrigPoly project(const TrigPoly& f, int n);

/// The same projection assembled from modulations and the analytic /
/// anti-analytic projections (f +- i Hf - a_0)/2. Returned at full width so
/// callers can confirm the truncated frequencies really vanished.
TrigPoly project_via_modulation(const TrigPoly& f, int n);

enum class PolyDist { gaussian, sparse, lacunary };

/// Deterministic test-family generator. gaussian draws i.i.d. standard
/// complex normal coefficients, sparse has exactly three nonzero entries,
/// lacunary puts 1 at k = +-2^j.
TrigPoly random_poly(int n, std::uint64_t seed, PolyDist dist);

/// f sampled at the 2m+1 nodes x_{m,k}, k ascending.
std::vector<Complex> node_samples(const TrigPoly& f, int m);

/// max |f| over a uniform grid (bracket seed for norm bisections).
double max_abs_on_grid(const TrigPoly& f, long npoints);

/// Plain-text record: first the degree n, then 2n+1 "re im" lines in
/// k-ascending order. '#' lines are comments.
std::string write_trigpoly(const TrigPoly& f);
TrigPoly parse_trigpoly(const std::string& text);

} // namespace orlicz
