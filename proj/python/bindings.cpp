#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orlicz/config.hpp"
#include "orlicz/csv.hpp"
#include "orlicz/hilbert.hpp"
#include "orlicz/nfunction.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/sampling.hpp"
#include "orlicz/samplingfn.hpp"

namespace py = pybind11;
using namespace orlicz;

namespace {

NFunction make_nf(const std::string& family, double alpha, double beta, double gamma,
                  bool normalize) {
    return NFunction::make(family_from_name(family), alpha, beta, gamma, normalize);
}

PolyDist dist_from_name(const std::string& name) {
    if (name == "gaussian")
        return PolyDist::gaussian;
    if (name == "sparse")
        return PolyDist::sparse;
    if (name == "lacunary")
        return PolyDist::lacunary;
    throw ParameterError("unknown distribution: " + name);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Marcinkiewicz sampling inequalities in Orlicz spaces";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<NoCertificateError>(m, "NoCertificateError", PyExc_RuntimeError);

    py::class_<NFunction>(m, "NFunction")
        .def(py::init(&make_nf), py::arg("family"), py::arg("alpha"), py::arg("beta") = 0.0,
             py::arg("gamma") = 0.0, py::arg("normalize") = true)
        .def("value", &NFunction::value)
        .def("density", &NFunction::density)
        .def("inverse", &NFunction::inverse)
        .def("conjugate", &NFunction::conjugate)
        .def_property_readonly("label", &NFunction::label)
        .def_property_readonly("normalized", &NFunction::normalized)
        .def("__repr__", [](const NFunction& nf) { return "<NFunction " + nf.label() + ">"; });

    py::class_<TrigPoly>(m, "TrigPoly")
        .def(py::init<int>(), py::arg("degree"))
        .def(py::init<int, std::vector<Complex>>(), py::arg("degree"), py::arg("coeffs"))
        .def_property_readonly("degree", &TrigPoly::degree)
        .def("coeff", &TrigPoly::coeff)
        .def("set_coeff", &TrigPoly::set_coeff)
        .def("coeffs", &TrigPoly::coeffs)
        .def("evaluate", &TrigPoly::evaluate)
        .def("is_zero", &TrigPoly::is_zero);

    m.def("nodes", [](int n) { return nodes(n).x; }, py::arg("n"));
    m.def("dirichlet", &dirichlet, py::arg("n"));
    m.def("spike_poly",
          [](int n, const std::vector<int>& s) { return spike_poly(n, s); }, py::arg("n"),
          py::arg("node_indices"));
    m.def("hilbert_transform", &hilbert_transform);
    m.def("project", &project, py::arg("f"), py::arg("n"));
    m.def("project_via_modulation", &project_via_modulation, py::arg("f"), py::arg("n"));
    m.def("random_poly",
          [](int n, std::uint64_t seed, const std::string& dist) {
              return random_poly(n, seed, dist_from_name(dist));
          },
          py::arg("n"), py::arg("seed"), py::arg("dist") = "gaussian");
    m.def("node_samples", &node_samples, py::arg("f"), py::arg("m"));

    py::class_<NormResult>(m, "NormResult")
        .def_readonly("value", &NormResult::value)
        .def_readonly("modular_residual", &NormResult::modular_residual)
        .def_readonly("bracket_width", &NormResult::bracket_width)
        .def_readonly("points", &NormResult::points)
        .def_readonly("converged", &NormResult::converged)
        .def("__repr__", [](const NormResult& r) {
            return "<NormResult value=" + csv_double(r.value) + ">";
        });

    m.def("continuous_modular",
          [](const NFunction& nf, const TrigPoly& f, double lam) {
              return continuous_modular(nf, f, lam).value;
          });
    m.def("luxemburg_norm_continuous", &luxemburg_norm_continuous);
    m.def("discrete_norm_ln", [](const NFunction& nf, const std::vector<Complex>& v) {
        return discrete_norm_ln(nf, v);
    });
    m.def("discrete_norm_omega",
          [](const NFunction& nf, const std::vector<Complex>& v, int n) {
              return discrete_norm_omega(nf, v, n);
          });

    py::class_<Delta2Result>(m, "Delta2Result")
        .def_readonly("value", &Delta2Result::value)
        .def_readonly("argmax_t", &Delta2Result::argmax_t)
        .def_readonly("non_delta2", &Delta2Result::non_delta2);
    m.def("delta2_constant", &delta2_constant);

    py::enum_<MultMode>(m, "MultMode")
        .value("super", MultMode::super)
        .value("sub", MultMode::sub);
    py::class_<MultiplicativityCertificate>(m, "MultiplicativityCertificate")
        .def_readonly("mode", &MultiplicativityCertificate::mode)
        .def_readonly("constant", &MultiplicativityCertificate::constant)
        .def_readonly("witness_a", &MultiplicativityCertificate::witness_a)
        .def_readonly("witness_b", &MultiplicativityCertificate::witness_b)
        .def_readonly("margin", &MultiplicativityCertificate::margin)
        .def_readonly("grid", &MultiplicativityCertificate::grid);
    m.def("multiplicativity_constant", &multiplicativity_constant);

    py::class_<IndexEstimate>(m, "IndexEstimate")
        .def_readonly("alpha_index", &IndexEstimate::alpha_index)
        .def_readonly("beta_index", &IndexEstimate::beta_index)
        .def_readonly("alpha_residual", &IndexEstimate::alpha_residual)
        .def_readonly("beta_residual", &IndexEstimate::beta_residual);
    m.def("matuszewska_indices", &matuszewska_indices);

    py::class_<ConditionReport>(m, "ConditionReport")
        .def_readonly("sup_ratio", &ConditionReport::sup_ratio)
        .def_readonly("worst_s", &ConditionReport::worst_s)
        .def_readonly("holds", &ConditionReport::holds)
        .def_readonly("max_remainder", &ConditionReport::max_remainder);
    m.def("check_small_condition", &check_small_condition);
    m.def("check_big_condition", &check_big_condition);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("check", &VerificationReport::check)
        .def_readonly("phi", &VerificationReport::phi)
        .def_readonly("n", &VerificationReport::n)
        .def_readonly("case_id", &VerificationReport::case_id)
        .def_readonly("lhs", &VerificationReport::lhs)
        .def_readonly("rhs", &VerificationReport::rhs)
        .def_readonly("ratio", &VerificationReport::ratio)
        .def_readonly("pass_", &VerificationReport::pass)
        .def_readonly("witness", &VerificationReport::witness)
        .def("__repr__", [](const VerificationReport& r) {
            return "<VerificationReport " + r.check + " ratio=" + csv_double(r.ratio) +
                   (r.pass ? " pass>" : " FAIL>");
        });

    m.def("verify_simple", &verify_simple, py::arg("nf"), py::arg("f"), py::arg("n"),
          py::arg("case_id") = "case");
    m.def("verify_modular_zygmund", &verify_modular_zygmund, py::arg("nf"), py::arg("f"),
          py::arg("n"), py::arg("case_id") = "case");
    m.def("verify_upper_sampling",
          [](const NFunction& nf, const TrigPoly& f, int n,
             const MultiplicativityCertificate& cert) {
              const auto rows = verify_upper_sampling(nf, f, n, cert);
              return std::vector<VerificationReport>{rows[0], rows[1]};
          });
    m.def("verify_lower_sampling",
          [](const NFunction& nf, const TrigPoly& f, int n,
             const MultiplicativityCertificate& cert) {
              return verify_lower_sampling(nf, f, n, cert, nullptr);
          });
    m.def("necessity_check", &necessity_check);
    m.def("estimate_cphi",
          [](const NFunction& nf, const std::vector<int>& degrees, const std::string& kind,
             int count, std::uint64_t seed) {
              const auto est = estimate_cphi(nf, degrees, kind, count, seed);
              return py::make_tuple(est.value, est.per_degree);
          },
          py::arg("nf"), py::arg("degrees"), py::arg("family_kind") = "standard",
          py::arg("count") = 25, py::arg("seed") = 42);

    m.def("dirichlet_norm", &dirichlet_norm);
    m.def("verify_dirichlet_lemma", &verify_dirichlet_lemma);
    m.def("verify_lambda_monotonicity",
          [](const NFunction& nf, int n_max) { return verify_lambda_monotonicity(nf, n_max); });
    m.def("weak_type_estimate",
          [](const TrigPoly& f, long grid) { return weak_type_estimate(f, grid).value; },
          py::arg("f"), py::arg("grid_size") = 1 << 12);

    py::class_<RawBound>(m, "RawBound")
        .def_readonly("value", &RawBound::value)
        .def_readonly("stabilized", &RawBound::stabilized);
    m.def("raw_sampling_bound", &raw_sampling_bound, py::arg("psi"), py::arg("t"),
          py::arg("x_points") = 300);
    m.def("sampling_function",
          [](const NFunction& psi) {
              const auto tab = sampling_function(psi);
              py::dict d;
              d["t"] = tab.t;
              d["raw"] = tab.raw;
              d["envelope"] = tab.envelope;
              d["hull"] = tab.hull;
              return d;
          });
    m.def("loglog_slope_at_zero",
          [](const NFunction& psi) { return loglog_slope_at_zero(psi).value; });

    // config-driven scan; returns (csv, violations, errors)
    m.def("run_scan", [](const std::string& config_json, int jobs) {
        const RunConfig cfg = RunConfig::parse(config_json);
        const ScanResult res = scan(cfg.to_scan_request(jobs));
        return py::make_tuple(csv_report(res.rows), res.violations, res.errors);
    }, py::arg("config_json"), py::arg("jobs") = 1);
}
