#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/nfunction.hpp"
#include "orlicz/sampling.hpp"

namespace orlicz {

/// One N-function record as it appears in the config file.
struct NFunctionSpec {
    Family family = Family::power;
    double alpha = 2.0;
    double beta = 0.0;
    double gamma = 0.0;
    bool normalize = true;

    NFunction build() const { return NFunction::make(family, alpha, beta, gamma, normalize); }
};

/// Interpolation-condition parameters for the `conditions` command.
struct ConditionSpec {
    double sigma = 1.0;
    double gamma = 1.0;
    double p = 3.0;
};

/// The configuration document driving every CLI command. Parsing is
/// fail-closed: unknown fields anywhere reject the whole document.
struct RunConfig {
    std::vector<NFunctionSpec> nfunctions;
    std::vector<int> degrees;
    std::string family_kind = "standard";
    int family_count = 100;
    std::uint64_t seed = 42;
    std::vector<CheckKind> checks;
    double ratio_tol = kRatioTol;
    std::optional<double> claimed_cphi;
    std::optional<ConditionSpec> conditions;
    std::string out_dir;

    static RunConfig parse(const std::string& json_text);
    static RunConfig load(const std::string& path);
    std::string serialize() const; ///< canonical JSON; parse(serialize()) round-trips

    ScanRequest to_scan_request(int jobs) const;
};

} // namespace orlicz
