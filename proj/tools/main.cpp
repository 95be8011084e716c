// orlicz: config-driven harness for the sampling-inequality scans, Luxemburg
// norms, index/condition estimates, Dirichlet tables and sampling functions.
//
// Exit codes: 0 all checks pass, 1 inequality violation, 2 usage or config
// error, 3 numerical non-convergence.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "orlicz/config.hpp"
#include "orlicz/csv.hpp"
#include "orlicz/hilbert.hpp"
#include "orlicz/nfunction.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/sampling.hpp"
#include "orlicz/samplingfn.hpp"

namespace {

using namespace orlicz;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

struct Options {
    std::string config_path;
    std::string poly_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int jobs = 1;
};

std::string phi_slug(const std::string& label) {
    std::string s;
    for (char c : label)
        s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    while (!s.empty() && s.back() == '_')
        s.pop_back();
    return s;
}

void emit(const Options& opt, const std::string& filename, const std::string& content) {
    if (opt.out_dir.empty()) {
        std::cout << content;
        return;
    }
    std::filesystem::create_directories(opt.out_dir);
    const auto path = std::filesystem::path(opt.out_dir) / filename;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParameterError("cannot write " + path.string());
    out << content;
}

RunConfig load_config(const Options& opt) {
    if (opt.config_path.empty())
        throw ParameterError("--config is required");
    RunConfig cfg = RunConfig::load(opt.config_path);
    if (opt.seed_set)
        cfg.seed = opt.seed;
    if (!opt.out_dir.empty())
        cfg.out_dir = opt.out_dir;
    return cfg;
}

TrigPoly read_poly(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParameterError("cannot open polynomial file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_trigpoly(ss.str());
}

int exit_code_from(const ScanResult& res) {
    if (res.violations > 0)
        return kExitViolation;
    if (res.errors > 0)
        return kExitNoConvergence;
    return kExitOk;
}

int cmd_norm(const Options& opt) {
    const RunConfig cfg = load_config(opt);
    const TrigPoly f = read_poly(opt.poly_path);
    const auto samples = node_samples(f, f.degree());
    std::string out;
    for (const NFunctionSpec& spec : cfg.nfunctions) {
        const NFunction nf = spec.build();
        out += "# phi=" + nf.label() + "\n";
        out += csv_header_norm();
        out += csv_row_norm("continuous", luxemburg_norm_continuous(nf, f));
        out += csv_row_norm("ell", discrete_norm_ln(nf, samples));
        out += csv_row_norm("omega", discrete_norm_omega(nf, samples, f.degree()));
    }
    emit(opt, "norms.csv", out);
    return kExitOk;
}

int cmd_scan(const Options& opt, bool verify_summary) {
    const RunConfig cfg = load_config(opt);
    const ScanResult res = scan(cfg.to_scan_request(opt.jobs));
    emit(opt, "report.csv", csv_report(res.rows));
    if (verify_summary) {
        // one aggregate line per (check, phi, degree)
        std::map<std::string, std::pair<int, double>> agg; // fails, worst ratio
        for (const auto& r : res.rows) {
            auto& slot = agg[r.check + " phi=" + r.phi + " n=" + std::to_string(r.n)];
            if (!r.pass)
                ++slot.first;
            slot.second = std::max(slot.second, r.ratio);
        }
        for (const auto& [key, v] : agg)
            std::cout << (v.first == 0 ? "[PASS] " : "[FAIL] ") << key
                      << " max_ratio=" << csv_double(v.second) << "\n";
        std::cout << (res.violations == 0 ? "VERIFY PASS" : "VERIFY FAIL")
                  << " (violations=" << res.violations << ", errors=" << res.errors << ")\n";
    }
    return exit_code_from(res);
}

int cmd_indices(const Options& opt) {
    const RunConfig cfg = load_config(opt);
    std::string out = "phi,alpha_index,beta_index,alpha_residual,beta_residual,t_lo,t_hi\n";
    for (const NFunctionSpec& spec : cfg.nfunctions) {
        const NFunction nf = spec.build();
        const IndexEstimate est = matuszewska_indices(nf);
        out += nf.label() + ',' + csv_double(est.alpha_index) + ',' + csv_double(est.beta_index) +
               ',' + csv_double(est.alpha_residual) + ',' + csv_double(est.beta_residual) + ',' +
               csv_double(est.t_lo) + ',' + csv_double(est.t_hi) + '\n';
    }
    emit(opt, "indices.csv", out);
    return kExitOk;
}

int cmd_conditions(const Options& opt) {
    const RunConfig cfg = load_config(opt);
    const ConditionSpec cs = cfg.conditions.value_or(ConditionSpec{});
    std::string out =
        "phi,sigma,small_sup,small_holds,gamma,p,big_sup,big_holds,max_remainder\n";
    for (const NFunctionSpec& spec : cfg.nfunctions) {
        const NFunction nf = spec.build();
        const ConditionReport small = check_small_condition(nf, cs.sigma);
        const ConditionReport big = check_big_condition(nf, cs.gamma, cs.p);
        out += nf.label() + ',' + csv_double(cs.sigma) + ',' + csv_double(small.sup_ratio) + ',' +
               (small.holds ? "1" : "0") + ',' + csv_double(cs.gamma) + ',' + csv_double(cs.p) +
               ',' + csv_double(big.sup_ratio) + ',' + (big.holds ? "1" : "0") + ',' +
               csv_double(std::max(small.max_remainder, big.max_remainder)) + '\n';
    }
    emit(opt, "conditions.csv", out);
    return kExitOk;
}

int cmd_dirichlet(const Options& opt) {
    const RunConfig cfg = load_config(opt);
    int n_max = 0;
    for (int n : cfg.degrees)
        n_max = std::max(n_max, n);
    int code = kExitOk;
    for (const NFunctionSpec& spec : cfg.nfunctions) {
        const NFunction nf = spec.build();
        std::string out = "# phi=" + nf.label() + "\n" + csv_header_dirichlet();
        const auto table = dirichlet_norm_table(nf, n_max);
        for (const auto& row : table)
            out += csv_row_dirichlet(row);
        std::vector<double> lambdas;
        for (const auto& row : table)
            lambdas.push_back(row.lambda);
        if (n_max >= 1 && !verify_lambda_monotonicity(nf, lambdas).pass)
            code = kExitViolation;
        emit(opt, "dirichlet_" + phi_slug(nf.label()) + ".csv", out);
    }
    return code;
}

int cmd_sampling_fn(const Options& opt) {
    const RunConfig cfg = load_config(opt);
    for (const NFunctionSpec& spec : cfg.nfunctions) {
        const NFunction nf = spec.build();
        const EnvelopeTable tab = sampling_function(nf);
        emit(opt, "sampling_fn_" + phi_slug(nf.label()) + ".csv",
             "# phi=" + nf.label() + "\n" + csv_envelope(nf, tab));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Marcinkiewicz sampling inequalities in Orlicz spaces"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--config", opt.config_path, "JSON run configuration");
    app.add_option("--out", opt.out_dir, "output directory (default: stdout)");
    app.add_option("--seed", opt.seed, "override the config seed")->each([&](std::string) {
        opt.seed_set = true;
    });
    app.add_option("--jobs", opt.jobs, "worker threads for scans")->check(CLI::PositiveNumber);

    auto* norm = app.add_subcommand("norm", "three Luxemburg norms of a polynomial file");
    norm->add_option("--poly", opt.poly_path, "TrigPoly file")->required();
    auto* verify = app.add_subcommand("verify", "run checks and print a pass/fail summary");
    auto* scan_cmd = app.add_subcommand("scan", "run checks and emit the full CSV report");
    auto* indices = app.add_subcommand("indices", "Matuszewska-Orlicz index estimates");
    auto* conditions = app.add_subcommand("conditions", "weak-type interpolation conditions");
    auto* dirichlet_cmd = app.add_subcommand("dirichlet", "Dirichlet-kernel norm table");
    auto* sampling_fn = app.add_subcommand("sampling-fn", "sampling function of each N-function");
    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (norm->parsed())
            return cmd_norm(opt);
        if (verify->parsed())
            return cmd_scan(opt, true);
        if (scan_cmd->parsed())
            return cmd_scan(opt, false);
        if (indices->parsed())
            return cmd_indices(opt);
        if (conditions->parsed())
            return cmd_conditions(opt);
        if (dirichlet_cmd->parsed())
            return cmd_dirichlet(opt);
        if (sampling_fn->parsed())
            return cmd_sampling_fn(opt);
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const NoCertificateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
