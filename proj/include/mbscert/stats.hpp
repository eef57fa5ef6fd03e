// Counting statistics: detector counts to probability tables with Poisson
// error propagation, and the one-sided certification significance.
#pragma once

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mbscert/data.hpp"
#include "mbscert/game.hpp"

namespace mbscert {

struct CountTable {
    struct Record {
        bool proj = true;  // PROJ settings carry y, POVM settings do not
        int x = 1;         // 1-based
        int y = 1;
        int outcome = 1;   // detector index, 1-based
        long long counts = 0;
    };
    std::vector<Record> records;
    long long shots_per_setting = 0;
    std::string source_label;
};

// PROJ settings: detector 1 carries outcome b=1, detectors 2..4 together
// carry b=0; the reported entry is p(b = delta_xy). Sigma is the first-order
// propagation of independent Poisson counts through the ratio, which for a
// single setting reduces to sqrt(p(1-p)/total).
inline ProbabilityTables counts_to_probabilities(const CountTable& t) {
    std::map<std::pair<int, int>, std::pair<long long, long long>> proj;  // hit, total
    std::map<int, std::pair<long long, long long>> povm;
    for (const CountTable::Record& r : t.records) {
        require(r.counts >= 0, "counts: negative count");
        require(r.x >= 1 && r.x <= kNumInputs, "counts: x out of range");
        if (r.proj) {
            require(r.y >= 1 && r.y <= kNumInputs, "counts: y out of range");
            require(r.outcome >= 1 && r.outcome <= 4, "counts: detector out of range");
            auto& cell = proj[{r.x, r.y}];
            if (r.outcome == 1) cell.first += r.counts;
            cell.second += r.counts;
        } else {
            require(r.outcome >= 1 && r.outcome <= kNumInputs,
                    "counts: outcome out of range");
            auto& cell = povm[r.x];
            if (r.outcome == r.x) cell.first += r.counts;
            cell.second += r.counts;
        }
    }
    ProbabilityTables out;
    out.proj.resize(kNumInputs, kNumInputs);
    out.povm.resize(kNumInputs);
    out.proj_sigma.resize(kNumInputs, kNumInputs);
    out.povm_sigma.resize(kNumInputs);
    out.has_sigma = true;
    for (int x = 1; x <= kNumInputs; ++x) {
        for (int y = 1; y <= kNumInputs; ++y) {
            auto it = proj.find({x, y});
            if (it == proj.end() || it->second.second == 0)
                throw EmptySettingError("counts: missing PROJ setting");
            double total = static_cast<double>(it->second.second);
            double p1 = static_cast<double>(it->second.first) / total;
            out.proj(x - 1, y - 1) = (x == y) ? p1 : 1.0 - p1;
            out.proj_sigma(x - 1, y - 1) = std::sqrt(p1 * (1.0 - p1) / total);
        }
        auto it = povm.find(x);
        if (it == povm.end() || it->second.second == 0)
            throw EmptySettingError("counts: missing POVM setting");
        double total = static_cast<double>(it->second.second);
        double p = static_cast<double>(it->second.first) / total;
        out.povm(x - 1) = p;
        out.povm_sigma(x - 1) = std::sqrt(p * (1.0 - p) / total);
    }
    return out;
}

struct Certification {
    double z = 0.0;
    double p = 0.0;
};

inline Certification certification_pvalue(double w, double sigma_w, double bound) {
    if (sigma_w <= 0.0)
        throw NonpositiveSigmaError("certification: sigma must be positive");
    Certification c;
    c.z = (w - bound) / sigma_w;
    c.p = 0.5 * std::erfc(c.z / std::sqrt(2.0));
    return c;
}

struct GoldenTables {
    ProbabilityTables theory;
    ProbabilityTables experiment;
};

inline ProbabilityTables from_data_tables(const data::Tables& t) {
    ProbabilityTables out;
    out.proj = t.proj;
    out.povm = t.povm;
    out.proj_sigma = t.proj_sigma;
    out.povm_sigma = t.povm_sigma;
    out.has_sigma = t.has_sigma;
    return out;
}

inline GoldenTables golden_tables() {
    return {from_data_tables(data::theory_tables()),
            from_data_tables(data::experiment_tables())};
}

}  // namespace mbscert
