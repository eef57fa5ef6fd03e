// Command-line workflows. Every command prints one JSON result document to
// standard output; artifact-producing commands also write their outputs and
// a run manifest under --out. Validation problems exit 2, solver
// non-convergence exits 3.
#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbscert/io.hpp"

namespace mbscert::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSeedEnvVar = "MBSCERT_SEED";
inline constexpr double kDefaultBound = 62.5152;

namespace detail {

using io::json;

inline std::uint64_t default_seed() {
    const char* env = std::getenv(kSeedEnvVar);
    if (!env) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw ValidationError(std::string("invalid ") + kSeedEnvVar + " value");
    }
}

inline MultiportUnitary load_unitary(const std::string& spec) {
    if (spec == "builtin:U7") return builtin_u7();
    if (spec == "builtin:U4") return builtin_u4();
    json j = io::read_json_file(spec);
    MultiportUnitary u;
    if (j.contains("unitary")) {
        u.matrix = io::matrix_from_json(j["unitary"]);
        u.label = j.value("label", spec);
    } else {
        u.matrix = io::matrix_from_json(j);
        u.label = spec;
    }
    require(u.matrix.rows() == u.matrix.cols(), "unitary file: matrix not square");
    u.ports = static_cast<int>(u.matrix.rows());
    return u;
}

inline Strategy load_strategy(const std::string& spec) {
    if (spec == "builtin:reference") return reference_strategy();
    Strategy s = io::strategy_from_json(io::read_json_file(spec));
    s.validate(tol::kPrintedData);
    return s;
}

class ManifestWriter {
  public:
    ManifestWriter(std::string command, std::string out_dir, json config,
                   std::uint64_t seed)
        : start_(std::chrono::steady_clock::now()) {
        manifest_.command = std::move(command);
        manifest_.config = std::move(config);
        manifest_.rng_seed = seed;
        manifest_.tool_version = kToolVersion;
        dir_ = std::move(out_dir);
        std::filesystem::create_directories(dir_);
    }

    std::string path(const std::string& name) {
        std::string p = (std::filesystem::path(dir_) / name).string();
        manifest_.outputs.push_back(p);
        return p;
    }

    void input(const std::string& p) { manifest_.inputs.push_back(p); }

    void finish(const std::string& name) {
        manifest_.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
        io::write_json_file((std::filesystem::path(dir_) / name).string(),
                            manifest_.to_json());
    }

  private:
    io::RunManifest manifest_;
    std::string dir_;
    std::chrono::steady_clock::time_point start_;
};

inline int cmd_enumerate_povms(const std::string& unitary_spec, int dim,
                               const std::string& out_dir, std::ostream& out) {
    MultiportUnitary u = load_unitary(unitary_spec);
    u.validate(tol::kPrintedData);
    ManifestWriter manifest(
        "enumerate-povms", out_dir,
        {{"unitary", unitary_spec}, {"dim", dim}}, 0);
    manifest.input(unitary_spec);
    MultiportUnitary clean = u;
    clean.matrix = nearest_unitary(u.matrix);
    json report;
    report["unitary_label"] = u.label;
    report["ports"] = u.ports;
    report["dim"] = dim;
    report["unitarity_deviation"] = unitarity_deviation(u.matrix);
    json entries = json::array();
    auto subsets = enumerate_subsets(u.ports, dim);
    const bool against_builtin =
        unitary_spec == "builtin:U7" && u.ports == 7 && dim == 4;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        PovmSpec spec;
        spec.subset = subsets[i];
        spec.phases.assign(dim, 0.0);
        Povm p = build_povm(clean, spec, tol::kCompleteness);
        std::string name = "povm_";
        for (int k : spec.subset) name += std::to_string(k);
        io::write_json_file(manifest.path(name + ".json"), io::povm_to_json(p));
        json entry;
        entry["subset"] = spec.subset;
        entry["completeness_residual"] = p.completeness_residual();
        if (against_builtin) {
            PovmComparison c = compare_builtin(static_cast<int>(i), clean);
            entry["reference_completeness_residual"] = c.completeness_residual;
            entry["max_element_distance"] = c.max_element_distance;
            entry["max_raw_entry_distance"] = c.max_raw_entry_distance;
            entry["phase_convention_mismatch"] = c.phase_convention_mismatch;
        }
        entries.push_back(entry);
    }
    report["povms"] = entries;
    io::write_json_file(manifest.path("enumeration_report.json"), report);
    manifest.finish("enumerate_povms_manifest.json");
    out << report.dump(1) << "\n";
    return 0;
}

inline int cmd_score(const std::string& strategy_path, const std::string& tables_path,
                     std::ostream& out) {
    require(strategy_path.empty() != tables_path.empty(),
            "score: give exactly one of --strategy or --tables");
    json result;
    if (!strategy_path.empty()) {
        Strategy s = load_strategy(strategy_path);
        result["W"] = score(s);
    } else {
        std::ifstream in(tables_path);
        if (!in) throw ValidationError("cannot open " + tables_path);
        ProbabilityTables t = io::tables_from_csv(in);
        ScoreResult r = score_from_probabilities(t);
        result["W"] = r.w;
        if (r.has_sigma) result["sigma"] = r.sigma;
    }
    out << result.dump(1) << "\n";
    return 0;
}

inline int cmd_seesaw(const std::string& mode_name, int restarts, int max_iters,
                      std::uint64_t seed, const std::string& initial_path,
                      const std::string& out_dir, std::ostream& out) {
    SeesawConfig cfg;
    if (mode_name == "fixed") cfg.mode = SeesawMode::kFixedFinal;
    else if (mode_name == "relaxed") cfg.mode = SeesawMode::kProjectiveRelaxed;
    else if (mode_name == "free") cfg.mode = SeesawMode::kFree;
    else throw ValidationError("seesaw: mode must be fixed, relaxed, or free");
    cfg.restarts = restarts;
    cfg.max_iters = max_iters;
    cfg.rng_seed = seed;
    ManifestWriter manifest("seesaw", out_dir,
                            {{"mode", mode_name},
                             {"restarts", restarts},
                             {"max_iters", max_iters}},
                            seed);
    Strategy initial;
    bool have_initial = false;
    if (!initial_path.empty()) {
        manifest.input(initial_path);
        initial = load_strategy(initial_path);
        have_initial = true;
    }
    SeesawTrace trace = run_seesaw(cfg, have_initial ? &initial : nullptr);
    json doc = io::seesaw_trace_to_json(trace, mode_name);
    io::write_json_file(manifest.path("seesaw_trace.json"), doc);
    manifest.finish("seesaw_manifest.json");
    json summary = doc;
    summary.erase("strategy");
    summary.erase("w_history");
    out << summary.dump(1) << "\n";
    return 0;
}

inline int cmd_bound(int samples, std::uint64_t seed, bool unsymmetrized,
                     const std::string& out_dir, std::ostream& out) {
    ManifestWriter manifest(
        "bound", out_dir,
        {{"samples", samples}, {"unsymmetrized", unsymmetrized}}, seed);
    Rng rng(seed);
    AffineBasis basis = build_affine_basis(samples, 1e-7, rng, !unsymmetrized);
    json doc;
    if (unsymmetrized) {
        // span growth diagnostics only; the unreduced problem is not solved
        doc = {{"basis_rank", basis.rank},
               {"samples_used", basis.samples_used},
               {"saturated", basis.saturated},
               {"seed", seed}};
    } else {
        BoundReport report = solve_upper_bound(basis, seed);
        report.seed = seed;
        doc = io::bound_report_to_json(report);
        doc["saturated"] = basis.saturated;
    }
    io::write_json_file(manifest.path("bound_report.json"), doc);
    manifest.finish("bound_manifest.json");
    out << doc.dump(1) << "\n";
    return 0;
}

inline int cmd_simulate(const std::string& strategy_path, long long shots,
                        double visibility, double jitter, std::uint64_t seed,
                        const std::string& out_dir, std::ostream& out) {
    Strategy s = load_strategy(strategy_path);
    NoiseModel noise;
    noise.shots = shots;
    noise.visibility = visibility;
    noise.phase_jitter_sigma = jitter;
    ManifestWriter manifest("simulate", out_dir,
                            {{"strategy", strategy_path},
                             {"shots", shots},
                             {"visibility", visibility},
                             {"phase_jitter_sigma", jitter}},
                            seed);
    manifest.input(strategy_path);
    Rng rng(seed);
    CountTable counts = simulate_counts(s, noise, rng);
    io::write_text_file(manifest.path("counts.csv"), io::counts_to_csv(counts));
    io::write_json_file(manifest.path("counts_metadata.json"),
                        io::counts_metadata_to_json(counts));
    ProbabilityTables tables = counts_to_probabilities(counts);
    io::write_text_file(manifest.path("tables.csv"), io::tables_to_csv(tables));
    manifest.finish("simulate_manifest.json");
    ScoreResult r = score_from_probabilities(tables);
    json result = {{"W", r.w}, {"sigma", r.sigma}, {"shots", shots},
                   {"visibility", visibility}, {"seed", seed}};
    out << result.dump(1) << "\n";
    return 0;
}

inline int cmd_certify(const std::string& tables_path, const std::string& counts_path,
                       double bound, double threshold, std::ostream& out) {
    require(tables_path.empty() != counts_path.empty(),
            "certify: give exactly one of --tables or --counts");
    ProbabilityTables t;
    if (!tables_path.empty()) {
        std::ifstream in(tables_path);
        if (!in) throw ValidationError("cannot open " + tables_path);
        t = io::tables_from_csv(in);
    } else {
        std::ifstream in(counts_path);
        if (!in) throw ValidationError("cannot open " + counts_path);
        t = counts_to_probabilities(io::counts_from_csv(in));
    }
    require(t.has_sigma, "certify: tables carry no uncertainties");
    ScoreResult r = score_from_probabilities(t);
    Certification c = certification_pvalue(r.w, r.sigma, bound);
    json result = {{"W", r.w},          {"sigma", r.sigma}, {"z", c.z},
                   {"p", c.p},          {"bound", bound},
                   {"certified", c.p < threshold}};
    out << result.dump(1) << "\n";
    return 0;
}

}  // namespace detail

// Parses arguments and dispatches; streams are injectable for testing.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
    std::uint64_t env_seed = 0;
    try {
        env_seed = detail::default_seed();
    } catch (const Error& e) {
        err << io::json({{"error", {{"type", "validation"},
                                    {"message", e.what()}}}}).dump()
            << "\n";
        return 2;
    }

    CLI::App app{"multiport-beamsplitter measurement toolkit"};
    app.require_subcommand(1);

    std::string unitary = "builtin:U7";
    int dim = 4;
    std::string out_dir = ".";
    auto* enumerate = app.add_subcommand("enumerate-povms",
                                         "build all port-subset measurements");
    enumerate->add_option("--unitary", unitary, "matrix file or builtin:U4/builtin:U7");
    enumerate->add_option("--dim", dim, "system dimension");
    enumerate->add_option("--out", out_dir, "output directory");

    std::string strategy_path, tables_path;
    auto* score_cmd = app.add_subcommand("score", "evaluate the game score");
    score_cmd->add_option("--strategy", strategy_path,
                          "strategy JSON or builtin:reference");
    score_cmd->add_option("--tables", tables_path, "probability tables CSV");

    std::string mode = "relaxed";
    int restarts = 50;
    int max_iters = 500;
    std::uint64_t seed = env_seed;
    std::string initial_path;
    std::string seesaw_out = ".";
    auto* seesaw_cmd = app.add_subcommand("seesaw", "alternating lower-bound search");
    seesaw_cmd->add_option("--mode", mode, "fixed, relaxed, or free");
    seesaw_cmd->add_option("--restarts", restarts, "number of random restarts");
    seesaw_cmd->add_option("--max-iters", max_iters, "sweep limit per restart");
    seesaw_cmd->add_option("--seed", seed, "rng seed");
    seesaw_cmd->add_option("--initial", initial_path, "starting strategy JSON");
    seesaw_cmd->add_option("--out", seesaw_out, "output directory");

    int samples = 600;
    std::uint64_t bound_seed = env_seed;
    bool unsymmetrized = false;
    std::string bound_out = ".";
    auto* bound_cmd = app.add_subcommand("bound", "sampled semidefinite upper bound");
    bound_cmd->add_option("--samples", samples, "sampling budget");
    bound_cmd->add_option("--seed", bound_seed, "rng seed");
    bound_cmd->add_flag("--unsymmetrized", unsymmetrized,
                        "span growth diagnostics without symmetrization");
    bound_cmd->add_option("--out", bound_out, "output directory");

    std::string sim_strategy = "builtin:reference";
    long long shots = 10000;
    double visibility = 1.0;
    double jitter = 0.0;
    std::uint64_t sim_seed = env_seed;
    std::string sim_out = ".";
    auto* sim_cmd = app.add_subcommand("simulate", "shot-noise count simulation");
    sim_cmd->add_option("--strategy", sim_strategy,
                        "strategy JSON or builtin:reference");
    sim_cmd->add_option("--shots", shots, "detected-count scale per setting");
    sim_cmd->add_option("--visibility", visibility, "interference contrast");
    sim_cmd->add_option("--jitter", jitter, "phase jitter sigma, radians");
    sim_cmd->add_option("--seed", sim_seed, "rng seed");
    sim_cmd->add_option("--out", sim_out, "output directory");

    std::string cert_tables, cert_counts;
    double cert_bound = kDefaultBound;
    double threshold = 0.01;
    auto* cert_cmd = app.add_subcommand("certify", "significance of a violation");
    cert_cmd->add_option("--tables", cert_tables, "probability tables CSV");
    cert_cmd->add_option("--counts", cert_counts, "count table CSV");
    cert_cmd->add_option("--bound", cert_bound, "value to certify against");
    cert_cmd->add_option("--threshold", threshold, "p-value cutoff");

    std::vector<const char*> argv;
    argv.push_back("mbscert");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << io::json({{"error", {{"type", "usage"}, {"message", e.what()}}}}).dump()
            << "\n";
        return 2;
    }

    try {
        if (enumerate->parsed())
            return detail::cmd_enumerate_povms(unitary, dim, out_dir, out);
        if (score_cmd->parsed())
            return detail::cmd_score(strategy_path, tables_path, out);
        if (seesaw_cmd->parsed())
            return detail::cmd_seesaw(mode, restarts, max_iters, seed, initial_path,
                                      seesaw_out, out);
        if (bound_cmd->parsed())
            return detail::cmd_bound(samples, bound_seed, unsymmetrized, bound_out, out);
        if (sim_cmd->parsed())
            return detail::cmd_simulate(sim_strategy, shots, visibility, jitter,
                                        sim_seed, sim_out, out);
        if (cert_cmd->parsed())
            return detail::cmd_certify(cert_tables, cert_counts, cert_bound,
                                       threshold, out);
        err << io::json({{"error", {{"type", "usage"},
                                    {"message", "no subcommand"}}}}).dump()
            << "\n";
        return 2;
    } catch (const SolverError& e) {
        err << io::json({{"error", {{"type", "solver"}, {"message", e.what()}}}})
                   .dump()
            << "\n";
        return 3;
    } catch (const Error& e) {
        err << io::json({{"error", {{"type", "validation"}, {"message", e.what()}}}})
                   .dump()
            << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << io::json({{"error", {{"type", "validation"}, {"message", e.what()}}}})
                   .dump()
            << "\n";
        return 2;
    }
}

}  // namespace mbscert::cli
