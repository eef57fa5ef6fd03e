#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mbscert/mbscert.hpp"
#include "golden_values.hpp"

using namespace mbscert;
namespace fs = std::filesystem;

#ifndef MBSCERT_DATA_DIR
#define MBSCERT_DATA_DIR "data"
#endif

namespace {

std::string asset(const std::string& name) {
    return std::string(MBSCERT_DATA_DIR) + "/" + name;
}

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
    io::json doc;  // parsed stdout when it is a JSON document
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliRun r;
    r.exit_code = cli::run_cli(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    if (!r.out.empty() && (r.out[0] == '{' || r.out[0] == '['))
        r.doc = io::json::parse(r.out);
    return r;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("mbscert_test_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str(const std::string& name = "") const {
        return name.empty() ? path.string() : (path / name).string();
    }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli: help and usage errors") {
    CliRun help = run({"--help"});
    REQUIRE(help.exit_code == 0);
    REQUIRE(help.out.find("seesaw") != std::string::npos);
    REQUIRE(help.err.empty());

    CliRun bad = run({"frobnicate"});
    REQUIRE(bad.exit_code == 2);
    io::json err = io::json::parse(bad.err);
    REQUIRE(err["error"]["type"] == "usage");
}

TEST_CASE("cli: score of the built-in strategy") {
    CliRun r = run({"score", "--strategy", "builtin:reference"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(std::abs(r.doc["W"].get<double>() - golden::kStrategyScore) < 1e-9);
    REQUIRE(!r.doc.contains("sigma"));
}

TEST_CASE("cli: score of a strategy file") {
    TempDir dir("score_file");
    std::string p = dir.str("strategy.json");
    io::write_json_file(p, io::strategy_to_json(reference_strategy()));
    CliRun r = run({"score", "--strategy", p});
    REQUIRE(r.exit_code == 0);
    REQUIRE(std::abs(r.doc["W"].get<double>() - golden::kStrategyScore) < 1e-9);
}

TEST_CASE("cli: score of measured tables carries sigma") {
    CliRun r = run({"score", "--tables", asset("tables_experiment.csv")});
    REQUIRE(r.exit_code == 0);
    REQUIRE(std::abs(r.doc["W"].get<double>() - golden::kTablesExperimentW) < 1e-12);
    REQUIRE(std::abs(r.doc["sigma"].get<double>() - golden::kTablesExperimentSigma) <
            1e-12);
}

TEST_CASE("cli: score argument validation") {
    REQUIRE(run({"score"}).exit_code == 2);
    REQUIRE(run({"score", "--strategy", "builtin:reference", "--tables",
                 asset("tables_theory.csv")})
                .exit_code == 2);
    CliRun missing = run({"score", "--strategy", "no_such_file.json"});
    REQUIRE(missing.exit_code == 2);
    REQUIRE(io::json::parse(missing.err)["error"]["type"] == "validation");
}

TEST_CASE("cli: certify the provided measured tables") {
    CliRun r = run({"certify", "--tables", asset("tables_experiment.csv")});
    REQUIRE(r.exit_code == 0);
    REQUIRE(std::abs(r.doc["z"].get<double>() - golden::kTablesExperimentZ) < 1e-9);
    REQUIRE(std::abs(r.doc["p"].get<double>() - golden::kTablesExperimentP) <
            1e-9);
    REQUIRE(r.doc["bound"].get<double>() == cli::kDefaultBound);
    REQUIRE(r.doc["certified"].get<bool>());
}

TEST_CASE("cli: certify refuses tables without uncertainties") {
    CliRun r = run({"certify", "--tables", asset("tables_theory.csv")});
    REQUIRE(r.exit_code == 2);
    REQUIRE(io::json::parse(r.err)["error"]["message"].get<std::string>().find(
                "uncertaint") != std::string::npos);
    REQUIRE(run({"certify"}).exit_code == 2);
}

TEST_CASE("cli: enumerate-povms writes all 35 measurements") {
    TempDir dir("enumerate");
    CliRun r = run({"enumerate-povms", "--out", dir.str()});
    REQUIRE(r.exit_code == 0);
    int povm_files = 0;
    for (const auto& e : fs::directory_iterator(dir.path)) {
        std::string name = e.path().filename().string();
        if (name.rfind("povm_", 0) == 0) ++povm_files;
    }
    REQUIRE(povm_files == 35);
    REQUIRE(fs::exists(dir.path / "povm_4567.json"));
    io::json report = io::read_json_file(dir.str("enumeration_report.json"));
    REQUIRE(report["povms"].size() == 35);
    for (const auto& entry : report["povms"])
        REQUIRE(entry["completeness_residual"].get<double>() < 1e-8);
    REQUIRE(!report["povms"][0]["phase_convention_mismatch"].get<bool>());
    REQUIRE(report["povms"][34]["phase_convention_mismatch"].get<bool>());
    REQUIRE(fs::exists(dir.path / "enumerate_povms_manifest.json"));

    Povm m = io::povm_from_json(io::read_json_file(dir.str("povm_4567.json")));
    REQUIRE(povm_equivalent(m, builtin_m4567_povm(), tol::kPrintedData));
}

TEST_CASE("cli: seesaw writes a trace and a manifest") {
    TempDir dir("seesaw");
    CliRun r = run({"seesaw", "--mode", "fixed", "--restarts", "3", "--seed", "11",
                    "--out", dir.str()});
    REQUIRE(r.exit_code == 0);
    REQUIRE(std::abs(r.doc["best_w"].get<double>() - golden::kHeadlineW) < 1e-3);
    REQUIRE(r.doc["converged"].get<bool>());
    REQUIRE(!r.doc.contains("strategy"));
    REQUIRE(!r.doc.contains("w_history"));

    io::json trace = io::read_json_file(dir.str("seesaw_trace.json"));
    REQUIRE(trace.contains("strategy"));
    REQUIRE(trace.contains("w_history"));
    REQUIRE(trace["best_w"] == r.doc["best_w"]);
    Strategy best = io::strategy_from_json(trace["strategy"]);
    REQUIRE(std::abs(score(best) - trace["best_w"].get<double>()) < 1e-9);

    io::json manifest = io::read_json_file(dir.str("seesaw_manifest.json"));
    REQUIRE(manifest["command"] == "seesaw");
    REQUIRE(manifest["rng_seed"].get<std::uint64_t>() == 11);
    REQUIRE(manifest["config"]["mode"] == "fixed");
    REQUIRE(manifest["wall_time_seconds"].get<double>() >= 0.0);
}

TEST_CASE("cli: seesaw rejects an unknown mode") {
    TempDir dir("seesaw_bad");
    CliRun r = run({"seesaw", "--mode", "sideways", "--out", dir.str()});
    REQUIRE(r.exit_code == 2);
}

TEST_CASE("cli: bound span diagnostics without symmetrization") {
    TempDir dir("bound_raw");
    CliRun r = run({"bound", "--unsymmetrized", "--samples", "40", "--seed", "5",
                    "--out", dir.str()});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.doc["basis_rank"].get<int>() == 40);
    REQUIRE(!r.doc["saturated"].get<bool>());
    REQUIRE(!r.doc.contains("bound"));
    REQUIRE(fs::exists(dir.path / "bound_report.json"));
    REQUIRE(fs::exists(dir.path / "bound_manifest.json"));
}

TEST_CASE("cli: bound solves a reduced sampled problem") {
    TempDir dir("bound_small");
    CliRun r = run({"bound", "--samples", "200", "--seed", "7", "--out", dir.str()});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.doc["saturated"].get<bool>());
    REQUIRE(r.doc["basis_rank"].get<int>() == golden::kSymmetrizedRank);
    REQUIRE(std::abs(r.doc["bound"].get<double>() - golden::kReferenceBound) < 1e-2);
    REQUIRE(r.doc["solver_residuals"]["dual_gap"].get<double>() <= 1e-5);
    io::json report = io::read_json_file(dir.str("bound_report.json"));
    REQUIRE(report["bound"] == r.doc["bound"]);
}

TEST_CASE("cli: simulate then certify a violation") {
    TempDir dir("simulate");
    CliRun sim = run({"simulate", "--shots", "20000", "--seed", "21", "--out",
                      dir.str()});
    REQUIRE(sim.exit_code == 0);
    REQUIRE(sim.doc["W"].get<double>() > 62.0);
    REQUIRE(sim.doc["sigma"].get<double>() > 0.0);
    REQUIRE(fs::exists(dir.path / "counts.csv"));
    REQUIRE(fs::exists(dir.path / "counts_metadata.json"));
    REQUIRE(fs::exists(dir.path / "tables.csv"));
    REQUIRE(fs::exists(dir.path / "simulate_manifest.json"));

    CliRun cert = run({"certify", "--counts", dir.str("counts.csv")});
    REQUIRE(cert.exit_code == 0);
    REQUIRE(std::abs(cert.doc["W"].get<double>() - sim.doc["W"].get<double>()) <
            1e-12);
    REQUIRE(cert.doc["certified"].get<bool>());

    CliRun cert2 = run({"certify", "--tables", dir.str("tables.csv")});
    REQUIRE(std::abs(cert2.doc["p"].get<double>() - cert.doc["p"].get<double>()) <
            1e-12);
}

TEST_CASE("cli: low visibility does not certify") {
    TempDir dir("simulate_low");
    CliRun sim = run({"simulate", "--shots", "20000", "--visibility", "0.9",
                      "--seed", "22", "--out", dir.str()});
    REQUIRE(sim.exit_code == 0);
    CliRun cert = run({"certify", "--counts", dir.str("counts.csv")});
    REQUIRE(cert.exit_code == 0);
    REQUIRE(!cert.doc["certified"].get<bool>());
}

TEST_CASE("cli: identical seeds give byte-identical counts") {
    TempDir a("rep_a"), b("rep_b");
    REQUIRE(run({"simulate", "--shots", "3000", "--seed", "9", "--out", a.str()})
                .exit_code == 0);
    REQUIRE(run({"simulate", "--shots", "3000", "--seed", "9", "--out", b.str()})
                .exit_code == 0);
    REQUIRE(slurp(a.str("counts.csv")) == slurp(b.str("counts.csv")));
    TempDir c("rep_c");
    REQUIRE(run({"simulate", "--shots", "3000", "--seed", "10", "--out", c.str()})
                .exit_code == 0);
    REQUIRE(slurp(a.str("counts.csv")) != slurp(c.str("counts.csv")));
}

TEST_CASE("cli: seed environment variable feeds defaults") {
    TempDir dir("env_seed");
    ::setenv(cli::kSeedEnvVar, "4242", 1);
    CliRun r = run({"simulate", "--shots", "1000", "--out", dir.str()});
    ::unsetenv(cli::kSeedEnvVar);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.doc["seed"].get<std::uint64_t>() == 4242);
    io::json manifest = io::read_json_file(dir.str("simulate_manifest.json"));
    REQUIRE(manifest["rng_seed"].get<std::uint64_t>() == 4242);

    ::setenv(cli::kSeedEnvVar, "not_a_number", 1);
    CliRun bad = run({"simulate", "--shots", "1000", "--out", dir.str()});
    ::unsetenv(cli::kSeedEnvVar);
    REQUIRE(bad.exit_code == 2);
}

TEST_CASE("cli: noise model validation surfaces as exit 2") {
    TempDir dir("sim_bad");
    CliRun r = run({"simulate", "--visibility", "1.5", "--out", dir.str()});
    REQUIRE(r.exit_code == 2);
    REQUIRE(io::json::parse(r.err)["error"]["type"] == "validation");
}
