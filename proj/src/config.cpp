#include "orlicz/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace orlicz {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& known, const char* where) {
    for (const auto& item : obj.items())
        if (!known.count(item.key()))
            throw ParameterError(std::string("config: unknown field '") + item.key() + "' in " +
                                 where);
}

NFunctionSpec parse_nfunction(const json& j) {
    reject_unknown(j, {"family", "alpha", "beta", "gamma", "normalize"}, "nfunctions[]");
    NFunctionSpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    spec.alpha = j.at("alpha").get<double>();
    spec.beta = j.value("beta", 0.0);
    spec.gamma = j.value("gamma", 0.0);
    spec.normalize = j.value("normalize", true);
    return spec;
}

} // namespace

RunConfig RunConfig::parse(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParameterError(std::string("config: invalid JSON: ") + e.what());
    }
    try {
        reject_unknown(j,
                       {"nfunctions", "degrees", "family", "checks", "tolerances", "claimed_cphi",
                        "conditions", "out_dir"},
                       "config");
        RunConfig cfg;
        for (const json& spec : j.at("nfunctions"))
            cfg.nfunctions.push_back(parse_nfunction(spec));
        for (const json& d : j.at("degrees")) {
            const int n = d.get<int>();
            if (n <= 0)
                throw ParameterError("config: degrees must be positive");
            cfg.degrees.push_back(n);
        }
        if (j.contains("family")) {
            const json& fam = j.at("family");
            reject_unknown(fam, {"kind", "count", "seed"}, "family");
            cfg.family_kind = fam.value("kind", std::string("standard"));
            cfg.family_count = fam.value("count", 100);
            cfg.seed = fam.value("seed", std::uint64_t{42});
            if (cfg.family_count < 1)
                throw ParameterError("config: family.count must be >= 1");
        }
        for (const json& c : j.value("checks", json::array()))
            cfg.checks.push_back(check_from_name(c.get<std::string>()));
        if (j.contains("tolerances")) {
            const json& tol = j.at("tolerances");
            reject_unknown(tol, {"ratio"}, "tolerances");
            cfg.ratio_tol = tol.value("ratio", kRatioTol);
        }
        if (j.contains("claimed_cphi"))
            cfg.claimed_cphi = j.at("claimed_cphi").get<double>();
        if (j.contains("conditions")) {
            const json& c = j.at("conditions");
            reject_unknown(c, {"sigma", "gamma", "p"}, "conditions");
            ConditionSpec cs;
            cs.sigma = c.value("sigma", 1.0);
            cs.gamma = c.value("gamma", 1.0);
            cs.p = c.value("p", 3.0);
            cfg.conditions = cs;
        }
        cfg.out_dir = j.value("out_dir", std::string{});
        return cfg;
    } catch (const json::exception& e) {
        throw ParameterError(std::string("config: ") + e.what());
    }
}

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParameterError("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string RunConfig::serialize() const {
    json j;
    j["nfunctions"] = json::array();
    for (const NFunctionSpec& s : nfunctions) {
        j["nfunctions"].push_back({{"family", family_name(s.family)},
                                   {"alpha", s.alpha},
                                   {"beta", s.beta},
                                   {"gamma", s.gamma},
                                   {"normalize", s.normalize}});
    }
    j["degrees"] = degrees;
    j["family"] = {{"kind", family_kind}, {"count", family_count}, {"seed", seed}};
    j["checks"] = json::array();
    for (CheckKind c : checks)
        j["checks"].push_back(check_name(c));
    j["tolerances"] = {{"ratio", ratio_tol}};
    if (claimed_cphi)
        j["claimed_cphi"] = *claimed_cphi;
    if (conditions)
        j["conditions"] = {{"sigma", conditions->sigma},
                           {"gamma", conditions->gamma},
                           {"p", conditions->p}};
    if (!out_dir.empty())
        j["out_dir"] = out_dir;
    return j.dump(2) + "\n";
}

ScanRequest RunConfig::to_scan_request(int jobs) const {
    ScanRequest req;
    for (const NFunctionSpec& s : nfunctions)
        req.nfunctions.push_back(s.build());
    req.degrees = degrees;
    req.family_kind = family_kind;
    req.family_count = family_count;
    req.seed = seed;
    req.checks = checks;
    req.ratio_tol = ratio_tol;
    req.claimed_cphi = claimed_cphi;
    req.jobs = jobs;
    return req;
}

} // namespace orlicz
