#include "orlicz/csv.hpp"

#include <cstdio>

namespace orlicz {

std::string csv_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string csv_header_report() { return "check,phi,n,case_id,lhs,rhs,ratio,pass,witness\n"; }

std::string csv_row(const VerificationReport& r) {
    std::string s;
    s += r.check;
    s += ',';
    s += r.phi;
    s += ',';
    s += std::to_string(r.n);
    s += ',';
    s += r.case_id;
    s += ',';
    s += csv_double(r.lhs);
    s += ',';
    s += csv_double(r.rhs);
    s += ',';
    s += csv_double(r.ratio);
    s += ',';
    s += r.pass ? "1" : "0";
    s += ',';
    s += r.witness;
    s += '\n';
    return s;
}

std::string csv_report(const std::vector<VerificationReport>& rows) {
    std::string s = csv_header_report();
    for (const auto& r : rows)
        s += csv_row(r);
    return s;
}

std::string csv_header_norm() { return "norm_kind,value,residual,points,converged\n"; }

std::string csv_row_norm(const std::string& kind, const NormResult& r) {
    std::string s;
    s += kind;
    s += ',';
    s += csv_double(r.value);
    s += ',';
    s += csv_double(r.modular_residual);
    s += ',';
    s += std::to_string(r.points);
    s += ',';
    s += r.converged ? "1" : "0";
    s += '\n';
    return s;
}

std::string csv_header_dirichlet() {
    return "n,lambda_n,lower_bound,middle,upper_bound_4pi,upper_bound_2pi_holds\n";
}

std::string csv_row_dirichlet(const DirichletNormRow& row) {
    const bool two_pi_ok = row.bounds.middle <= row.bounds.upper_2pi * (1.0 + kRatioTol);
    std::string s;
    s += std::to_string(row.n);
    s += ',';
    s += csv_double(row.lambda);
    s += ',';
    s += csv_double(row.bounds.lower);
    s += ',';
    s += csv_double(row.bounds.middle);
    s += ',';
    s += csv_double(row.bounds.upper_4pi);
    s += ',';
    s += two_pi_ok ? "1" : "0";
    s += '\n';
    return s;
}

std::string csv_header_envelope() { return "t,raw,envelope,closed_form,ratio\n"; }

std::string csv_envelope(const NFunction& psi, const EnvelopeTable& tab) {
    std::string s = csv_header_envelope();
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
        s += csv_double(tab.t[i]);
        s += ',';
        s += csv_double(tab.raw[i]);
        s += ',';
        s += csv_double(tab.envelope[i]);
        s += ',';
        double cf = 0.0;
        if (sampling_closed_form(psi, tab.t[i], &cf)) {
            s += csv_double(cf);
            s += ',';
            s += csv_double(tab.envelope[i] / cf);
        } else {
            s += ',';
        }
        s += '\n';
    }
    return s;
}

} // namespace orlicz
