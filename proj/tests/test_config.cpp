#include <doctest.h>

#include "orlicz/config.hpp"

using namespace orlicz;

namespace {

const char* kMinimal = R"({
  "nfunctions": [
    {"family": "power", "alpha": 2.0},
    {"family": "power_log", "alpha": 2.0, "beta": 1.0}
  ],
  "degrees": [4, 16],
  "family": {"kind": "standard", "count": 25, "seed": 7},
  "checks": ["simple", "zygmund"]
})";

} // namespace

TEST_CASE("config parses and round-trips losslessly") {
    const RunConfig cfg = RunConfig::parse(kMinimal);
    CHECK(cfg.nfunctions.size() == 2);
    CHECK(cfg.nfunctions[1].family == Family::power_log);
    CHECK(cfg.nfunctions[1].beta == 1.0);
    CHECK(cfg.degrees == std::vector<int>{4, 16});
    CHECK(cfg.family_count == 25);
    CHECK(cfg.seed == 7);
    CHECK(cfg.checks.size() == 2);
    CHECK(cfg.ratio_tol == kRatioTol);
    CHECK_FALSE(cfg.claimed_cphi.has_value());

    const RunConfig back = RunConfig::parse(cfg.serialize());
    CHECK(back.serialize() == cfg.serialize());
    CHECK(back.degrees == cfg.degrees);
    CHECK(back.family_kind == cfg.family_kind);
    CHECK(back.nfunctions[0].alpha == cfg.nfunctions[0].alpha);
    CHECK(back.checks == cfg.checks);
}

TEST_CASE("config is fail-closed") {
    CHECK_THROWS_AS(RunConfig::parse("{\"nfunctions\": [], \"degrees\": [1], \"oops\": 1}"),
                    ParameterError);
    CHECK_THROWS_AS(RunConfig::parse(R"({
        "nfunctions": [{"family": "power", "alpha": 2, "zeta": 3}],
        "degrees": [4]})"),
                    ParameterError);
    CHECK_THROWS_AS(RunConfig::parse(R"({
        "nfunctions": [{"family": "power", "alpha": 2}],
        "degrees": [0]})"),
                    ParameterError);
    CHECK_THROWS_AS(RunConfig::parse(R"({
        "nfunctions": [{"family": "power", "alpha": 2}],
        "degrees": [4], "checks": ["bogus"]})"),
                    ParameterError);
    CHECK_THROWS_AS(RunConfig::parse("not json"), ParameterError);
    CHECK_THROWS_AS(RunConfig::parse(R"({
        "nfunctions": [{"family": "power", "alpha": 2}],
        "degrees": [4], "family": {"kind": "standard", "count": 0}})"),
                    ParameterError);
}

TEST_CASE("optional fields") {
    const RunConfig cfg = RunConfig::parse(R"({
        "nfunctions": [{"family": "power", "alpha": 1.0}],
        "degrees": [8],
        "checks": ["lower"],
        "claimed_cphi": 1.5,
        "tolerances": {"ratio": 1e-6},
        "conditions": {"sigma": 1.0, "gamma": 1.0, "p": 3.0},
        "out_dir": "out"})");
    CHECK(cfg.claimed_cphi == 1.5);
    CHECK(cfg.ratio_tol == 1e-6);
    REQUIRE(cfg.conditions.has_value());
    CHECK(cfg.conditions->p == 3.0);
    CHECK(cfg.out_dir == "out");

    const RunConfig round = RunConfig::parse(cfg.serialize());
    CHECK(round.claimed_cphi == cfg.claimed_cphi);
    CHECK(round.conditions->sigma == cfg.conditions->sigma);

    const ScanRequest req = cfg.to_scan_request(2);
    CHECK(req.jobs == 2);
    CHECK(req.nfunctions.size() == 1);
    CHECK(req.claimed_cphi == 1.5);
}
