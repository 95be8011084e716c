#include "orlicz/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

namespace orlicz {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// splitmix64; used to derive independent per-case seeds
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next_u64() { return state = mix64(state); }
    // uniform in (0, 1]
    double next_unit() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53; }
    // standard complex normal: E|z|^2 = 1
    Complex next_cnormal() {
        const double r = std::sqrt(-std::log(next_unit()));
        const double phi = kTwoPi * next_unit();
        return {r * std::cos(phi), r * std::sin(phi)};
    }
};

} // namespace

TrigPoly::TrigPoly(int degree, std::vector<Complex> coeffs)
    : n_(check_degree(degree)), a_(std::move(coeffs)) {
    if (a_.size() != 2 * static_cast<size_t>(n_) + 1)
        throw ParameterError("coefficient vector must have length 2n+1");
}

void TrigPoly::set_coeff(int k, Complex v) {
    if (k < -n_ || k > n_)
        throw ParameterError("coefficient index out of range");
    a_[static_cast<size_t>(k + n_)] = v;
}

Complex TrigPoly::evaluate(double x) const {
    // sum a_k e^{ikx} = e^{-inx} * sum_m a_{m-n} w^m,  w = e^{ix}
    const Complex w = std::polar(1.0, x);
    Complex acc = a_.back();
    for (size_t m = a_.size() - 1; m-- > 0;)
        acc = acc * w + a_[m];
    return acc * std::polar(1.0, -static_cast<double>(n_) * x);
}

bool TrigPoly::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Complex c) { return c == Complex{}; });
}

NodeSet nodes(int n) {
    if (n < 0)
        throw ParameterError("node degree must be non-negative");
    NodeSet ns;
    ns.degree = n;
    ns.weight = 1.0 / (2.0 * n + 1.0);
    ns.x.resize(2 * static_cast<size_t>(n) + 1);
    for (int k = -n; k <= n; ++k)
        ns.x[static_cast<size_t>(k + n)] = kTwoPi * (n + k) / (2.0 * n + 1.0);
    return ns;
}

TrigPoly dirichlet(int n) {
    TrigPoly d(n);
    for (int k = -n; k <= n; ++k)
        d.set_coeff(k, 1.0);
    return d;
}

TrigPoly spike_poly(int n, std::span<const int> node_indices) {
    if (node_indices.empty())
        throw ParameterError("spike polynomial needs a nonempty node set");
    std::set<int> seen;
    const NodeSet ns = nodes(n);
    TrigPoly f(n);
    const double inv = 1.0 / (2.0 * n + 1.0);
    for (int j : node_indices) {
        if (j < -n || j > n)
            throw ParameterError("spike node index out of range");
        if (!seen.insert(j).second)
            throw ParameterError("spike node indices must be distinct");
        const double xj = ns.x[static_cast<size_t>(j + n)];
        // D_n(. - x_j)/(2n+1) contributes e^{-ik x_j}/(2n+1) at frequency k
        for (int k = -n; k <= n; ++k)
            f.set_coeff(k, f.coeff(k) + std::polar(inv, -k * xj));
    }
    return f;
}

TrigPoly hilbert_transform(const TrigPoly& f) {
    const int n = f.degree();
    TrigPoly h(n);
    const Complex minus_i{0.0, -1.0};
    for (int k = 1; k <= n; ++k) {
        h.set_coeff(k, minus_i * f.coeff(k));
        h.set_coeff(-k, -minus_i * f.coeff(-k));
    }
    return h;
}

TrigPoly project(const TrigPoly& f, int n) {
    if (n < 0)
        throw ParameterError("projection degree must be non-negative");
    if (n >= f.degree())
        return f;
    TrigPoly g(n);
    for (int k = -n; k <= n; ++k)
        g.set_coeff(k, f.coeff(k));
    return g;
}

namespace {

TrigPoly modulate(const TrigPoly& f, int shift) {
    const int n = f.degree() + std::abs(shift);
    TrigPoly g(n);
    for (int k = -f.degree(); k <= f.degree(); ++k)
        g.set_coeff(k + shift, f.coeff(k));
    return g;
}

// (f + i Hf - a_0)/2 and (f - i Hf - a_0)/2: the strictly positive / strictly
// negative frequency parts
TrigPoly half_plane(const TrigPoly& f, bool positive) {
    const TrigPoly h = hilbert_transform(f);
    const Complex i{0.0, 1.0};
    const double s = positive ? 1.0 : -1.0;
    TrigPoly g(f.degree());
    for (int k = -f.degree(); k <= f.degree(); ++k)
        g.set_coeff(k, 0.5 * (f.coeff(k) + s * i * h.coeff(k)));
    g.set_coeff(0, Complex{});
    return g;
}

} // namespace

TrigPoly project_via_modulation(const TrigPoly& f, int n) {
    if (n < 0)
        throw ParameterError("projection degree must be non-negative");
    const int s = n + 1;
    TrigPoly g = modulate(f, s);
    g = half_plane(g, /*positive=*/true);
    g = modulate(g, -2 * s);
    g = half_plane(g, /*positive=*/false);
    return modulate(g, s);
}

TrigPoly random_poly(int n, std::uint64_t seed, PolyDist dist) {
    if (n < 0)
        throw ParameterError("polynomial degree must be non-negative");
    Rng rng(mix64(seed + 0x5bf03635ULL));
    TrigPoly f(n);
    switch (dist) {
    case PolyDist::gaussian:
        for (int k = -n; k <= n; ++k)
            f.set_coeff(k, rng.next_cnormal());
        break;
    case PolyDist::sparse: {
        if (2 * n + 1 < 3)
            throw ParameterError("sparse polynomials need 2n+1 >= 3");
        std::set<int> idx;
        while (idx.size() < 3)
            idx.insert(static_cast<int>(rng.next_u64() % (2 * n + 1)) - n);
        for (int k : idx)
            f.set_coeff(k, rng.next_cnormal());
        break;
    }
    case PolyDist::lacunary: {
        if (n < 1)
            throw ParameterError("lacunary polynomials need degree >= 1");
        for (int p = 1; p <= n; p *= 2) {
            f.set_coeff(p, 1.0);
            f.set_coeff(-p, 1.0);
        }
        break;
    }
    }
    return f;
}

std::vector<Complex> node_samples(const TrigPoly& f, int m) {
    const NodeSet ns = nodes(m);
    std::vector<Complex> v(ns.x.size());
    for (size_t i = 0; i < ns.x.size(); ++i)
        v[i] = f.evaluate(ns.x[i]);
    return v;
}

std::string write_trigpoly(const TrigPoly& f) {
    char buf[96];
    std::string s = std::to_string(f.degree());
    s += '\n';
    for (int k = -f.degree(); k <= f.degree(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", f.coeff(k).real(), f.coeff(k).imag());
        s += buf;
    }
    return s;
}

TrigPoly parse_trigpoly(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&]() -> const std::string& {
        while (std::getline(in, line)) {
            const auto pos = line.find_first_not_of(" \t\r");
            if (pos != std::string::npos && line[pos] != '#')
                return line;
        }
        throw ParameterError("polynomial record is truncated");
    };
    int n = 0;
    if (std::sscanf(next_line().c_str(), "%d", &n) != 1 || n < 0)
        throw ParameterError("polynomial record must start with the degree n");
    TrigPoly f(n);
    for (int k = -n; k <= n; ++k) {
        double re = 0.0, im = 0.0;
        if (std::sscanf(next_line().c_str(), "%lf %lf", &re, &im) != 2)
            throw ParameterError("polynomial record: bad coefficient line for k=" +
                                 std::to_string(k));
        f.set_coeff(k, {re, im});
    }
    return f;
}

double max_abs_on_grid(const TrigPoly& f, long npoints) {
    double m = 0.0;
    for (long i = 0; i < npoints; ++i)
        m = std::max(m, std::abs(f.evaluate(kTwoPi * static_cast<double>(i) /
                                            static_cast<double>(npoints))));
    return m;
}

} // namespace orlicz
