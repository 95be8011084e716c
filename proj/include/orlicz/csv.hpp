#pragma once

#include <string>
#include <vector>

#include "orlicz/hilbert.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/sampling.hpp"
#include "orlicz/samplingfn.hpp"

namespace orlicz {

/// Floats in every report are printed with 17 significant digits so repeated
/// runs are byte-comparable.
std::string csv_double(double x);

std::string csv_header_report();
std::string csv_row(const VerificationReport& r);
std::string csv_report(const std::vector<VerificationReport>& rows);

std::string csv_header_norm();
std::string csv_row_norm(const std::string& kind, const NormResult& r);

std::string csv_header_dirichlet();
std::string csv_row_dirichlet(const DirichletNormRow& row);

std::string csv_header_envelope();
std::string csv_envelope(const NFunction& psi, const EnvelopeTable& tab);

} // namespace orlicz
