// Serialization: JSON for operators and strategies, CSV for probability and
// count tables, and the run manifest. Complex scalars travel as [re, im];
// matrices as row-major entry lists with explicit shape.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbscert/photonics.hpp"
#include "mbscert/sdp.hpp"
#include "mbscert/seesaw.hpp"

namespace mbscert::io {

using nlohmann::json;

inline json complex_to_json(const Cplx& z) { return json::array({z.real(), z.imag()}); }

inline Cplx complex_from_json(const json& j) {
    require(j.is_array() && j.size() == 2, "json: complex scalar must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json matrix_to_json(const Mat& m) {
    json entries = json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) entries.push_back(complex_to_json(m(r, c)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline Mat matrix_from_json(const json& j) {
    require(j.contains("rows") && j.contains("cols") && j.contains("entries"),
            "json: matrix needs rows, cols, entries");
    int rows = j["rows"].get<int>();
    int cols = j["cols"].get<int>();
    require(rows > 0 && cols > 0, "json: nonpositive matrix shape");
    const json& entries = j["entries"];
    require(static_cast<int>(entries.size()) == rows * cols,
            "json: entry count does not match shape");
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m(r, c) = complex_from_json(entries[r * cols + c]);
    return m;
}

inline json ket_to_json(const Vec& v) {
    json amps = json::array();
    for (int i = 0; i < v.size(); ++i) amps.push_back(complex_to_json(v(i)));
    return {{"dim", v.size()}, {"amplitudes", amps}};
}

inline Vec ket_from_json(const json& j) {
    require(j.contains("dim") && j.contains("amplitudes"),
            "json: ket needs dim and amplitudes");
    int dim = j["dim"].get<int>();
    const json& amps = j["amplitudes"];
    require(static_cast<int>(amps.size()) == dim, "json: amplitude count mismatch");
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = complex_from_json(amps[i]);
    return v;
}

inline json povm_to_json(const Povm& p) {
    json els = json::array();
    for (const Mat& m : p.elements) els.push_back(matrix_to_json(m));
    return {{"dim", p.dim}, {"elements", els}};
}

inline Povm povm_from_json(const json& j) {
    require(j.contains("dim") && j.contains("elements"),
            "json: povm needs dim and elements");
    Povm p;
    p.dim = j["dim"].get<int>();
    for (const json& e : j["elements"]) p.elements.push_back(matrix_from_json(e));
    return p;
}

inline json strategy_to_json(const Strategy& s) {
    json states = json::array();
    for (const Vec& v : s.states) states.push_back(ket_to_json(v));
    json dich = json::array();
    for (const Povm& p : s.dichotomic) dich.push_back(povm_to_json(p));
    return {{"states", states}, {"dichotomic", dich},
            {"final", povm_to_json(s.final_povm)}};
}

inline Strategy strategy_from_json(const json& j) {
    require(j.contains("states") && j.contains("dichotomic") && j.contains("final"),
            "json: strategy needs states, dichotomic, final");
    Strategy s;
    for (const json& k : j["states"]) s.states.push_back(ket_from_json(k));
    for (const json& p : j["dichotomic"]) s.dichotomic.push_back(povm_from_json(p));
    s.final_povm = povm_from_json(j["final"]);
    return s;
}

// ---- probability tables: CSV with header table,x,y,value,sigma

inline std::string tables_to_csv(const ProbabilityTables& t) {
    std::ostringstream out;
    out << "table,x,y,value,sigma\n";
    out.precision(17);
    for (int x = 0; x < kNumInputs; ++x)
        for (int y = 0; y < kNumInputs; ++y) {
            out << "PROJ," << (x + 1) << ',' << (y + 1) << ',' << t.proj(x, y) << ',';
            if (t.has_sigma) out << t.proj_sigma(x, y);
            out << '\n';
        }
    for (int x = 0; x < kNumInputs; ++x) {
        out << "POVM," << (x + 1) << ",," << t.povm(x) << ',';
        if (t.has_sigma) out << t.povm_sigma(x);
        out << '\n';
    }
    return out.str();
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace detail

inline ProbabilityTables tables_from_csv(std::istream& in) {
    ProbabilityTables t;
    t.proj.resize(kNumInputs, kNumInputs);
    t.povm.resize(kNumInputs);
    t.proj_sigma = RMat::Zero(kNumInputs, kNumInputs);
    t.povm_sigma = RVec::Zero(kNumInputs);
    RMat seen_proj = RMat::Zero(kNumInputs, kNumInputs);
    RVec seen_povm = RVec::Zero(kNumInputs);
    bool any_sigma = false;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            require(line.rfind("table,x,y,value,sigma", 0) == 0,
                    "tables csv: unexpected header");
            continue;
        }
        auto f = detail::split_csv_line(line);
        require(f.size() == 5, "tables csv: need 5 fields per row");
        double value = std::stod(f[3]);
        double sigma = 0.0;
        if (!f[4].empty()) {
            sigma = std::stod(f[4]);
            any_sigma = true;
        }
        int x = std::stoi(f[1]);
        require(x >= 1 && x <= kNumInputs, "tables csv: x out of range");
        if (f[0] == "PROJ") {
            int y = std::stoi(f[2]);
            require(y >= 1 && y <= kNumInputs, "tables csv: y out of range");
            t.proj(x - 1, y - 1) = value;
            t.proj_sigma(x - 1, y - 1) = sigma;
            seen_proj(x - 1, y - 1) = 1.0;
        } else if (f[0] == "POVM") {
            t.povm(x - 1) = value;
            t.povm_sigma(x - 1) = sigma;
            seen_povm(x - 1) = 1.0;
        } else {
            throw ValidationError("tables csv: unknown table kind " + f[0]);
        }
    }
    if (seen_proj.sum() < kNumInputs * kNumInputs || seen_povm.sum() < kNumInputs)
        throw MissingEntryError("tables csv: incomplete table");
    t.has_sigma = any_sigma;
    return t;
}

// ---- count tables: CSV with header kind,x,y,outcome,counts

inline std::string counts_to_csv(const CountTable& t) {
    std::ostringstream out;
    out << "kind,x,y,outcome,counts\n";
    for (const CountTable::Record& r : t.records) {
        out << (r.proj ? "PROJ," : "POVM,") << r.x << ',';
        if (r.proj) out << r.y;
        out << ',' << r.outcome << ',' << r.counts << '\n';
    }
    return out.str();
}

inline json counts_metadata_to_json(const CountTable& t) {
    return {{"shots_per_setting", t.shots_per_setting},
            {"source", t.source_label}};
}

inline CountTable counts_from_csv(std::istream& in, const json& metadata = {}) {
    CountTable t;
    if (metadata.contains("shots_per_setting"))
        t.shots_per_setting = metadata["shots_per_setting"].get<long long>();
    if (metadata.contains("source"))
        t.source_label = metadata["source"].get<std::string>();
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            require(line.rfind("kind,x,y,outcome,counts", 0) == 0,
                    "counts csv: unexpected header");
            continue;
        }
        auto f = detail::split_csv_line(line);
        require(f.size() == 5, "counts csv: need 5 fields per row");
        CountTable::Record r;
        if (f[0] == "PROJ") {
            r.proj = true;
            r.y = std::stoi(f[2]);
        } else if (f[0] == "POVM") {
            r.proj = false;
            r.y = 0;
            require(f[2].empty(), "counts csv: POVM rows leave y empty");
        } else {
            throw ValidationError("counts csv: unknown kind " + f[0]);
        }
        r.x = std::stoi(f[1]);
        r.outcome = std::stoi(f[3]);
        r.counts = std::stoll(f[4]);
        t.records.push_back(r);
    }
    return t;
}

// ---- reports

inline json bound_report_to_json(const BoundReport& r) {
    return {{"bound", r.bound},
            {"basis_rank", r.basis_rank},
            {"samples_used", r.samples_used},
            {"solver_residuals",
             {{"dual_gap", r.residuals.dual_gap},
              {"min_eigenvalue", r.residuals.min_eigenvalue},
              {"grad_norm", r.residuals.grad_norm},
              {"newton_steps", r.residuals.newton_steps},
              {"reduced_size", r.residuals.reduced_size}}},
            {"seed", r.seed}};
}

inline json seesaw_trace_to_json(const SeesawTrace& t, const std::string& mode) {
    return {{"mode", mode},
            {"best_w", t.best_w},
            {"best_restart", t.best_restart},
            {"converged", t.converged},
            {"iterations", t.w_history.size()},
            {"w_history", t.w_history},
            {"final_measurement",
             {{"max_idempotency_defect", t.final_report.max_idempotency_defect},
              {"max_cross_norm", t.final_report.max_cross_norm},
              {"projective_1e6", t.final_report.projective(1e-6)}}},
            {"strategy", strategy_to_json(t.best)}};
}

// ---- files

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
}

inline void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(1) + "\n");
}

struct RunManifest {
    std::string command;
    json config;
    std::uint64_t rng_seed = 0;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::string tool_version;
    double wall_time_seconds = 0.0;

    json to_json() const {
        return {{"command", command},       {"config", config},
                {"rng_seed", rng_seed},     {"inputs", inputs},
                {"outputs", outputs},       {"tool_version", tool_version},
                {"wall_time_seconds", wall_time_seconds}};
    }
};

}  // namespace mbscert::io
