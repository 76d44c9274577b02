#pragma once

// Serialization: CSV tables (17 significant digits, '.' decimal separator,
// no locale), key-value text reports, JSON documents, and support-set files
// (one decimal point index per line).

#include "w1/bounds.hpp"
#include "w1/certify.hpp"
#include "w1/changdim.hpp"
#include "w1/euclid.hpp"
#include "w1/extremal.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace w1 {

inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_bound_csv(std::ostream& os, const BoundReport& rep) {
    os << "a";
    for (const auto& [name, col] : rep.columns) os << "," << name;
    os << "\n";
    for (size_t i = 0; i < rep.grid.size(); ++i) {
        os << fmt17(rep.grid[i]);
        for (const auto& [name, col] : rep.columns) {
            os << ",";
            if (!std::isnan(col[i])) os << fmt17(col[i]);
        }
        os << "\n";
    }
}

inline void write_cert_report(std::ostream& os, const CertReport& rep) {
    os << "region: " << rep.region << "\n";
    os << "grid_step: " << fmt17(rep.grid_step) << "\n";
    os << "max_gamma: " << fmt17(rep.max_gamma) << "\n";
    os << "argmax: (" << fmt17(rep.argmax_a0) << ", " << fmt17(rep.argmax_a1) << ")\n";
    os << "diagonal_max: " << fmt17(rep.diagonal_max) << "\n";
    os << "off_diagonal_max: " << fmt17(rep.off_diagonal_max) << "\n";
    for (const auto& [k, v] : rep.endpoint_sweeps) os << "sweep." << k << ": " << fmt17(v) << "\n";
    for (const auto& [k, v] : rep.constants) os << "const." << k << ": " << fmt17(v) << "\n";
    os << "pass: " << (rep.pass ? "true" : "false") << "\n";
    for (const auto& n : rep.notes) os << "note: " << n << "\n";
}

inline nlohmann::json cert_to_json(const CertReport& rep) {
    nlohmann::json j;
    j["region"] = rep.region;
    j["grid_step"] = rep.grid_step;
    j["max_gamma"] = rep.max_gamma;
    j["argmax"] = {rep.argmax_a0, rep.argmax_a1};
    j["diagonal_max"] = rep.diagonal_max;
    j["off_diagonal_max"] = rep.off_diagonal_max;
    j["endpoint_sweeps"] = rep.endpoint_sweeps;
    j["constants"] = rep.constants;
    j["pass"] = rep.pass;
    j["notes"] = rep.notes;
    return j;
}

inline std::vector<uint32_t> mask_to_points(uint64_t mask) {
    std::vector<uint32_t> pts;
    for (uint32_t i = 0; i < 64; ++i)
        if ((mask >> i) & 1) pts.push_back(i);
    return pts;
}

inline void write_extremal_report(std::ostream& os, const ExtremalResult& res) {
    os << "n: " << res.n << "\n";
    os << "m: " << res.m << "\n";
    os << "feasible: " << (res.feasible ? "true" : "false") << "\n";
    if (!res.feasible) return;
    os << "max_w1: " << res.exact.str() << " = " << fmt17(res.w1) << "\n";
    os << "maximizer_count: " << res.maximizer_count << "\n";
    for (size_t i = 0; i < res.maximizers.size(); ++i) {
        os << "maximizer " << i << " (self_consistent=" << (res.self_consistent[i] ? "yes" : "no")
           << "):";
        for (uint32_t p : mask_to_points(res.maximizers[i])) os << " " << p;
        os << "\n";
    }
}

inline nlohmann::json extremal_to_json(const ExtremalResult& res) {
    nlohmann::json j;
    j["n"] = res.n;
    j["m"] = res.m;
    j["feasible"] = res.feasible;
    if (!res.feasible) return j;
    j["max_w1"] = res.exact.str();
    j["max_w1_real"] = res.w1;
    j["maximizer_count"] = res.maximizer_count;
    auto arr = nlohmann::json::array();
    for (size_t i = 0; i < res.maximizers.size(); ++i) {
        nlohmann::json mj;
        mj["support"] = mask_to_points(res.maximizers[i]);
        mj["self_consistent"] = bool(res.self_consistent[i]);
        arr.push_back(mj);
    }
    j["maximizers"] = arr;
    return j;
}

// masks rendered as binary strings, most significant bit = coordinate n
inline std::string mask_to_binary(uint32_t mask, int n) {
    std::string s(n, '0');
    for (int j = 0; j < n; ++j)
        if ((mask >> j) & 1) s[n - 1 - j] = '1';
    return s;
}

inline void write_spec_report(std::ostream& os, const SpecSet& set) {
    os << "n: " << set.n << "\n";
    os << "epsilon: " << fmt17(set.epsilon) << "\n";
    os << "members: " << set.members.size() << "\n";
    for (uint32_t m : set.members) os << "member: " << mask_to_binary(m, set.n) << "\n";
    os << "dimension: " << set.dimension << "\n";
    for (uint32_t b : set.basis) os << "basis: " << mask_to_binary(b, set.n) << "\n";
}

inline void write_support(std::ostream& os, const std::vector<uint32_t>& pts) {
    for (uint32_t p : pts) os << p << "\n";
}

inline std::vector<uint32_t> read_support(std::istream& is) {
    std::vector<uint32_t> pts;
    long long v = 0;
    while (is >> v) {
        if (v < 0) throw std::invalid_argument("read_support: negative index");
        pts.push_back(uint32_t(v));
    }
    return pts;
}

inline void write_mc_report(std::ostream& os, const MCEstimate& est) {
    os << "mean: " << fmt17(est.mean) << "\n";
    os << "std_error: " << fmt17(est.std_error) << "\n";
    os << "samples: " << est.samples << "\n";
    os << "seed: " << est.seed << "\n";
}

}  // namespace w1
