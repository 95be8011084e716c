#include "orlicz/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <thread>
#include <tuple>

namespace orlicz {

namespace {

std::string fmt_id(const char* prefix, int i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%03d", prefix, i);
    return buf;
}

VerificationReport make_row(std::string check, const NFunction& nf, int n, std::string case_id,
                            double lhs, double rhs, double tol, std::string witness) {
    VerificationReport r;
    r.check = std::move(check);
    r.phi = nf.label();
    r.n = n;
    r.case_id = std::move(case_id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = rhs == 0.0 ? (lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity())
                         : lhs / rhs;
    r.pass = r.ratio <= 1.0 + tol;
    r.witness = std::move(witness);
    return r;
}

// Everything the four checks need for one (phi, n, case) triple.
struct CaseNorms {
    double cont = 0.0;
    double ell = 0.0;
    double omega = 0.0;
    double zyg_lhs = 0.0;
    double zyg_rhs = 0.0;
    std::vector<double> sample_mags;
};

CaseNorms compute_case_norms(const NFunction& nf, const TrigPoly& f, int n) {
    CaseNorms cn;
    const auto samples = node_samples(f, n);
    cn.cont = luxemburg_norm_continuous(nf, f).value;
    cn.ell = discrete_norm_ln(nf, samples).value;
    cn.omega = discrete_norm_omega(nf, samples, n).value;
    cn.sample_mags.resize(samples.size());
    double zl = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        cn.sample_mags[i] = std::abs(samples[i]);
        zl += nf.value(cn.sample_mags[i] / 3.0);
    }
    cn.zyg_lhs = zl / (2.0 * n + 1.0);
    cn.zyg_rhs = f.is_zero() ? 0.0 : continuous_modular(nf, f, 1.0).value;
    return cn;
}

// Counts realized proof pairs (a, b) falling outside a < 1 <= ab < b.
int pairs_outside_region(std::span<const double> mags, double denom, double c, double q,
                         bool upper) {
    int outside = 0;
    for (double m : mags) {
        const double p = m / denom;
        if (upper) {
            if (p < c)
                continue; // S_n branch, no multiplicativity pair used
            const double a = p / (c * q);
            if (!(a < 1.0 && a * q >= 1.0 && a * q < q))
                ++outside;
        } else {
            const double a = p;
            if (!(a * q >= 1.0))
                continue;
            if (!(a < 1.0 && a * q < q))
                ++outside;
        }
    }
    return outside;
}

struct RowBundle {
    std::vector<VerificationReport> rows;
};

RowBundle rows_for_case(const NFunction& nf, int n, const CaseNorms& cn, const std::string& id,
                        const std::string& witness, std::span<const CheckKind> checks,
                        const MultiplicativityCertificate* sup_cert,
                        const MultiplicativityCertificate* sub_cert, const CphiEstimate* cphi,
                        std::optional<double> claimed_cphi, double tol) {
    RowBundle out;
    const double q = nf.inverse(2.0 * n + 1.0);
    for (CheckKind c : checks) {
        switch (c) {
        case CheckKind::simple:
            out.rows.push_back(
                make_row("simple", nf, n, id, cn.omega, 3.0 * cn.cont, tol, witness));
            break;
        case CheckKind::zygmund:
            out.rows.push_back(
                make_row("zygmund", nf, n, id, cn.zyg_lhs, cn.zyg_rhs, tol, witness));
            break;
        case CheckKind::upper: {
            const double c2 = sup_cert->constant * sup_cert->constant;
            std::string w = witness;
            if (cn.omega > 0.0) {
                const int outside = pairs_outside_region(cn.sample_mags, cn.omega,
                                                         sup_cert->constant, q, true);
                if (outside > 0)
                    w += ";pairs_outside=" + std::to_string(outside);
            }
            out.rows.push_back(
                make_row("thm1_eq4", nf, n, id, cn.ell, 6.0 * c2 * q * cn.cont, tol, w));
            out.rows.push_back(
                make_row("thm4_part1", nf, n, id, cn.ell, 2.0 * c2 * q * cn.omega, tol, w));
            break;
        }
        case CheckKind::lower: {
            std::string w = witness;
            if (cn.ell > 0.0) {
                const int outside =
                    pairs_outside_region(cn.sample_mags, cn.ell, sub_cert->constant, q, false);
                if (outside > 0)
                    w += ";pairs_outside=" + std::to_string(outside);
            }
            out.rows.push_back(make_row("thm4_part2", nf, n, id,
                                        sub_cert->constant * q * cn.omega, 2.0 * cn.ell, tol, w));
            if (claimed_cphi) {
                out.rows.push_back(make_row("thm1_eq5", nf, n, id,
                                            sub_cert->constant / *claimed_cphi * q * cn.cont,
                                            2.0 * cn.ell, tol,
                                            w + ";claimed_cphi=" + std::to_string(*claimed_cphi)));
            } else if (cphi) {
                out.rows.push_back(make_row("thm1_eq5_consistency", nf, n, id,
                                            sub_cert->constant / cphi->value * q * cn.cont,
                                            2.0 * cn.ell, tol, w + ";measured_cphi"));
            }
            break;
        }
        }
    }
    return out;
}

void run_parallel(int jobs, size_t count, const std::function<void(size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    const int workers = std::min<int>(jobs, static_cast<int>(count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    std::atomic<size_t> next{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                fn(i);
            }
        });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace

std::vector<FamilyCase> make_family(const std::string& kind, int n, int count,
                                    std::uint64_t seed) {
    std::vector<FamilyCase> cases;
    auto gauss_seed = [&](int i) {
        return seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n) +
               static_cast<std::uint64_t>(i);
    };
    if (kind == "standard") {
        TrigPoly c(n);
        c.set_coeff(0, 1.0);
        cases.push_back({"const", "constant(1)", c});
        const std::vector<int> one{-n};
        cases.push_back({"spike1", "spike(S={-n})", spike_poly(n, one)});
        std::vector<int> all(2 * static_cast<size_t>(n) + 1);
        for (int k = -n; k <= n; ++k)
            all[static_cast<size_t>(k + n)] = k;
        cases.push_back({"spike_all", "spike(S=all)", spike_poly(n, all)});
        cases.push_back({"dirichlet", "dirichlet", dirichlet(n)});
        if (n >= 1)
            cases.push_back({"lacunary", "lacunary", random_poly(n, seed, PolyDist::lacunary)});
        for (int i = 0; static_cast<int>(cases.size()) < count; ++i)
            cases.push_back({fmt_id("gauss", i), "gaussian(seed=" + std::to_string(gauss_seed(i)) + ")",
                             random_poly(n, gauss_seed(i), PolyDist::gaussian)});
    } else if (kind == "gaussian") {
        for (int i = 0; i < count; ++i)
            cases.push_back({fmt_id("gauss", i), "gaussian(seed=" + std::to_string(gauss_seed(i)) + ")",
                             random_poly(n, gauss_seed(i), PolyDist::gaussian)});
    } else if (kind == "dirichlet") {
        cases.push_back({"dirichlet", "dirichlet", dirichlet(n)});
    } else if (kind == "lacunary") {
        cases.push_back({"lacunary", "lacunary", random_poly(n, seed, PolyDist::lacunary)});
    } else if (kind == "constant") {
        TrigPoly c(n);
        c.set_coeff(0, 1.0);
        cases.push_back({"const", "constant(1)", c});
    } else {
        throw ParameterError("unknown family kind: " + kind);
    }
    if (count > 0 && static_cast<int>(cases.size()) > count)
        cases.erase(cases.begin() + count, cases.end());
    return cases;
}

VerificationReport verify_simple(const NFunction& nf, const TrigPoly& f, int n,
                                 const std::string& case_id) {
    if (f.degree() > n)
        throw ParameterError("verify_simple requires degree(f) <= n");
    const CaseNorms cn = compute_case_norms(nf, f, n);
    return make_row("simple", nf, n, case_id, cn.omega, 3.0 * cn.cont, kRatioTol, "");
}

VerificationReport verify_modular_zygmund(const NFunction& nf, const TrigPoly& f, int n,
                                          const std::string& case_id) {
    if (f.degree() > n)
        throw ParameterError("verify_modular_zygmund requires degree(f) <= n");
    const auto samples = node_samples(f, n);
    double lhs = 0.0;
    for (const Complex& s : samples)
        lhs += nf.value(std::abs(s) / 3.0);
    lhs /= 2.0 * n + 1.0;
    const double rhs = f.is_zero() ? 0.0 : continuous_modular(nf, f, 1.0).value;
    return make_row("zygmund", nf, n, case_id, lhs, rhs, kRatioTol, "");
}

std::array<VerificationReport, 2> verify_upper_sampling(const NFunction& nf, const TrigPoly& f,
                                                        int n,
                                                        const MultiplicativityCertificate& cert,
                                                        const std::string& case_id) {
    if (cert.mode != MultMode::super)
        throw ParameterError("verify_upper_sampling needs a supermultiplicativity certificate");
    const CaseNorms cn = compute_case_norms(nf, f, n);
    const std::vector<CheckKind> checks{CheckKind::upper};
    auto rows = rows_for_case(nf, n, cn, case_id, "", checks, &cert, nullptr, nullptr, std::nullopt,
                              kRatioTol)
                    .rows;
    return {rows[0], rows[1]};
}

std::vector<VerificationReport> verify_lower_sampling(const NFunction& nf, const TrigPoly& f,
                                                      int n,
                                                      const MultiplicativityCertificate& cert,
                                                      const CphiEstimate* cphi,
                                                      const std::string& case_id) {
    if (cert.mode != MultMode::sub)
        throw ParameterError("verify_lower_sampling needs a submultiplicativity certificate");
    const CaseNorms cn = compute_case_norms(nf, f, n);
    const std::vector<CheckKind> checks{CheckKind::lower};
    return rows_for_case(nf, n, cn, case_id, "", checks, nullptr, &cert, cphi, std::nullopt,
                         kRatioTol)
        .rows;
}

CphiEstimate estimate_cphi(const NFunction& nf, std::span<const int> degrees,
                           const std::string& family_kind, int count, std::uint64_t seed) {
    CphiEstimate est;
    est.family = family_kind + "(count=" + std::to_string(count) +
                 ",seed=" + std::to_string(seed) + ")";
    for (int n : degrees) {
        double sup_n = 0.0;
        for (const FamilyCase& fc : make_family(family_kind, n, count, seed)) {
            if (fc.poly.is_zero())
                continue;
            const double cont = luxemburg_norm_continuous(nf, fc.poly).value;
            const double omega = discrete_norm_omega(nf, node_samples(fc.poly, n), n).value;
            if (omega > 0.0)
                sup_n = std::max(sup_n, cont / omega);
        }
        est.per_degree.emplace_back(n, sup_n);
        est.value = std::max(est.value, sup_n);
    }
    return est;
}

VerificationReport necessity_check(const NFunction& nf, int n, int k) {
    if (k < 1 || k > 2 * n + 1)
        throw ParameterError("necessity_check requires 1 <= k <= 2n+1");
    std::vector<int> idx(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j)
        idx[static_cast<size_t>(j)] = -n + j;
    const TrigPoly f = spike_poly(n, idx);
    const auto samples = node_samples(f, n);

    const double ell_cf = 1.0 / nf.inverse(1.0 / k);
    const double omega_cf = 1.0 / nf.inverse((2.0 * n + 1.0) / k);
    const double ell = discrete_norm_ln(nf, samples).value;
    const double omega = discrete_norm_omega(nf, samples, n).value;
    const double disc = std::max(std::abs(ell - ell_cf) / ell_cf,
                                 std::abs(omega - omega_cf) / omega_cf);
    const double c_implied =
        nf.inverse((2.0 * n + 1.0) / k) / (nf.inverse(1.0 / k) * nf.inverse(2.0 * n + 1.0));
    char w[96];
    std::snprintf(w, sizeof(w), "k=%d;C_implied=%.17g", k, c_implied);
    return make_row("necessity_closed_form", nf, n, fmt_id("spike_k", k), disc, 1e-9, kRatioTol, w);
}

std::string check_name(CheckKind c) {
    switch (c) {
    case CheckKind::simple: return "simple";
    case CheckKind::zygmund: return "zygmund";
    case CheckKind::upper: return "upper";
    case CheckKind::lower: return "lower";
    }
    return "simple";
}

CheckKind check_from_name(const std::string& name) {
    if (name == "simple") return CheckKind::simple;
    if (name == "zygmund") return CheckKind::zygmund;
    if (name == "upper") return CheckKind::upper;
    if (name == "lower") return CheckKind::lower;
    throw ParameterError("unknown check: " + name);
}

ScanResult scan(const ScanRequest& req) {
    ScanResult result;
    const bool need_super =
        std::find(req.checks.begin(), req.checks.end(), CheckKind::upper) != req.checks.end();
    const bool need_sub =
        std::find(req.checks.begin(), req.checks.end(), CheckKind::lower) != req.checks.end();

    for (const NFunction& nf : req.nfunctions) {
        std::optional<MultiplicativityCertificate> sup_cert, sub_cert;
        if (need_super)
            sup_cert = multiplicativity_constant(nf, MultMode::super);
        if (need_sub)
            sub_cert = multiplicativity_constant(nf, MultMode::sub);

        // pass 1: norms per (degree, case), parallelizable
        struct Slot {
            int n;
            const FamilyCase* fc;
            CaseNorms norms;
            std::string error;
        };
        std::vector<std::vector<FamilyCase>> families;
        std::vector<Slot> slots;
        for (int n : req.degrees)
            families.push_back(make_family(req.family_kind, n, req.family_count, req.seed));
        for (size_t d = 0; d < req.degrees.size(); ++d)
            for (const FamilyCase& fc : families[d])
                slots.push_back({req.degrees[d], &fc, {}, {}});

        run_parallel(req.jobs, slots.size(), [&](size_t i) {
            try {
                slots[i].norms = compute_case_norms(nf, slots[i].fc->poly, slots[i].n);
            } catch (const std::exception& e) {
                slots[i].error = e.what();
            }
        });

        CphiEstimate cphi;
        cphi.family = req.family_kind;
        if (need_sub && !req.claimed_cphi) {
            for (const Slot& s : slots)
                if (s.error.empty() && s.norms.omega > 0.0)
                    cphi.value = std::max(cphi.value, s.norms.cont / s.norms.omega);
        }

        for (const Slot& s : slots) {
            if (!s.error.empty()) {
                for (CheckKind c : req.checks) {
                    VerificationReport r;
                    r.check = check_name(c);
                    r.phi = nf.label();
                    r.n = s.n;
                    r.case_id = s.fc->id;
                    r.pass = false;
                    r.witness = "error: " + s.error;
                    result.rows.push_back(std::move(r));
                    ++result.errors;
                }
                continue;
            }
            auto bundle = rows_for_case(nf, s.n, s.norms, s.fc->id, s.fc->witness, req.checks,
                                        sup_cert ? &*sup_cert : nullptr,
                                        sub_cert ? &*sub_cert : nullptr,
                                        need_sub && !req.claimed_cphi ? &cphi : nullptr,
                                        req.claimed_cphi, req.ratio_tol);
            for (auto& r : bundle.rows)
                result.rows.push_back(std::move(r));
        }
    }

    std::sort(result.rows.begin(), result.rows.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return std::tie(a.check, a.phi, a.n, a.case_id) <
                         std::tie(b.check, b.phi, b.n, b.case_id);
              });
    for (const auto& r : result.rows)
        if (!r.pass && r.witness.rfind("error:", 0) != 0)
            ++result.violations;
    return result;
}

} // namespace orlicz
