#pragma once

// Boolean functions f : {+-1}^n -> {0,1} as dense truth tables, their
// Walsh-Hadamard spectra, level weights, average Hamming distance, and the
// one-coordinate decomposition.
//
// Index convention, shared by every module: point index i in [0, 2^n), bit j
// of i equal to 0 means x_{j+1} = +1, bit 1 means x_{j+1} = -1. Consequently
// chi_S(x(i)) = (-1)^popcount(i & S) for a frequency mask S.

#include "w1/rng.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

namespace w1 {

inline constexpr int kMaxDim = 24;

class BoolFun {
public:
    explicit BoolFun(int n) : n_(check_dim(n)), bits_((size_t(1) << n) / 64 + 1, 0) {}

    static BoolFun zero(int n) { return BoolFun(n); }

    static BoolFun ones(int n) {
        BoolFun f(n);
        for (uint32_t i = 0; i < f.size(); ++i) f.set(i, true);
        return f;
    }

    static BoolFun from_support(int n, const std::vector<uint32_t>& points) {
        BoolFun f(n);
        for (uint32_t p : points) {
            if (p >= f.size()) throw std::out_of_range("from_support: point index out of range");
            f.set(p, true);
        }
        return f;
    }

    // indicator of {x in {+-1}^n : sum_i x_i >= min_sum}; the classic balls
    static BoolFun hamming_ball(int n, int min_sum) {
        BoolFun f(n);
        for (uint32_t i = 0; i < f.size(); ++i)
            if (n - 2 * std::popcount(i) >= min_sum) f.set(i, true);
        return f;
    }

    // dictator 1{x_coord = +1}, coord is 1-based
    static BoolFun dictator(int n, int coord) {
        BoolFun f(n);
        uint32_t bit = uint32_t(1) << (coord - 1);
        for (uint32_t i = 0; i < f.size(); ++i)
            if (!(i & bit)) f.set(i, true);
        return f;
    }

    // uniformly random m-point support, deterministic for a fixed seed
    // (Floyd's sampling algorithm on the splitmix64 stream)
    static BoolFun random_fn(int n, uint64_t m, uint64_t seed) {
        BoolFun f(n);
        uint64_t N = f.size();
        if (m > N) throw std::out_of_range("random_fn: m exceeds 2^n");
        Rng rng(seed);
        std::unordered_set<uint64_t> chosen;
        for (uint64_t j = N - m; j < N; ++j) {
            uint64_t t = rng.below(j + 1);
            if (!chosen.insert(t).second) chosen.insert(j);
        }
        for (uint64_t p : chosen) f.set(uint32_t(p), true);
        return f;
    }

    int dim() const { return n_; }
    uint32_t size() const { return uint32_t(1) << n_; }

    bool test(uint32_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
    void set(uint32_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v) bits_[i >> 6] |= mask;
        else bits_[i >> 6] &= ~mask;
    }

    uint64_t support_size() const {
        uint64_t c = 0;
        for (uint64_t word : bits_) c += std::popcount(word);
        return c;
    }

    double mean() const { return double(support_size()) / double(size()); }

    std::vector<uint32_t> support() const {
        std::vector<uint32_t> pts;
        pts.reserve(support_size());
        for (uint32_t i = 0; i < size(); ++i)
            if (test(i)) pts.push_back(i);
        return pts;
    }

    friend bool operator==(const BoolFun& a, const BoolFun& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    static int check_dim(int n) {
        if (n < 1 || n > kMaxDim) throw std::out_of_range("BoolFun: dimension must be in [1,24]");
        return n;
    }

    int n_;
    std::vector<uint64_t> bits_;
};

// All 2^n Fourier coefficients, entry S = f_hat(S) for the subset bitmask S.
struct Spectrum {
    int n = 0;
    std::vector<double> coeffs;

    double coeff(uint32_t mask) const { return coeffs[mask]; }
};

// In-place butterfly, O(n 2^n). coeffs[S] = 2^-n sum_i f(i) (-1)^popcount(i&S).
inline Spectrum wht(const BoolFun& f) {
    Spectrum s;
    s.n = f.dim();
    uint32_t N = f.size();
    s.coeffs.resize(N);
    for (uint32_t i = 0; i < N; ++i) s.coeffs[i] = f.test(i) ? 1.0 : 0.0;
    for (uint32_t len = 1; len < N; len <<= 1) {
        for (uint32_t i = 0; i < N; i += len << 1) {
            for (uint32_t j = i; j < i + len; ++j) {
                double u = s.coeffs[j], v = s.coeffs[j + len];
                s.coeffs[j] = u + v;
                s.coeffs[j + len] = u - v;
            }
        }
    }
    double scale = std::ldexp(1.0, -s.n);
    for (double& c : s.coeffs) c *= scale;
    return s;
}

// sum of squared coefficients over masks of popcount k
inline double level_weight(const Spectrum& s, int k) {
    if (k < 0 || k > s.n) throw std::out_of_range("level_weight: k must be in [0,n]");
    double acc = 0.0;
    for (uint32_t mask = 0; mask < s.coeffs.size(); ++mask)
        if (std::popcount(mask) == k) acc += s.coeffs[mask] * s.coeffs[mask];
    return acc;
}

// exact column sums: colsum[j] = sum over the support of x_{j+1} (= +-1)
inline std::vector<int64_t> coord_colsums(const BoolFun& f) {
    std::vector<int64_t> cs(f.dim(), 0);
    for (uint32_t i = 0; i < f.size(); ++i) {
        if (!f.test(i)) continue;
        for (int j = 0; j < f.dim(); ++j)
            cs[j] += ((i >> j) & 1) ? -1 : 1;
    }
    return cs;
}

// Average Hamming distance over ordered pairs (with replacement) of
// independent uniform points of the support. Computed from exact integer
// pair counts: sum_{x,y in A} d_H(x,y) = sum_j 2 k_j (|A| - k_j) with k_j
// the number of support points whose j-th coordinate is -1.
inline double avg_distance(const BoolFun& f) {
    uint64_t m = f.support_size();
    if (m == 0) throw std::domain_error("avg_distance: empty support");
    if (m <= (uint64_t(1) << 13)) {
        // literal pairwise sum on small supports
        auto pts = f.support();
        uint64_t total = 0;
        for (uint32_t x : pts)
            for (uint32_t y : pts) total += std::popcount(x ^ y);
        return double(total) / (double(m) * double(m));
    }
    uint64_t total = 0;
    auto cs = coord_colsums(f);
    for (int64_t c : cs) {
        uint64_t k = uint64_t((int64_t(m) - c) / 2);
        total += 2 * k * (m - k);
    }
    return double(total) / (double(m) * double(m));
}

// residual |W_1 - a^2 (n - 2 D)|; identically small for every f
inline double check_wd_identity(const BoolFun& f) {
    double a = f.mean();
    if (f.support_size() == 0) throw std::domain_error("check_wd_identity: empty support");
    double w1 = level_weight(wht(f), 1);
    double rhs = a * a * (f.dim() - 2.0 * avg_distance(f));
    return std::abs(w1 - rhs);
}

// restrictions (g, h) = (f|_{x_coord=+1}, f|_{x_coord=-1}), coord 1-based;
// f rebuilds exactly as (1+x)/2 g + (1-x)/2 h
inline std::pair<BoolFun, BoolFun> decompose(const BoolFun& f, int coord) {
    if (coord < 1 || coord > f.dim()) throw std::out_of_range("decompose: coordinate out of range");
    if (f.dim() < 2) throw std::out_of_range("decompose: need dimension >= 2");
    int nb = coord - 1;
    uint32_t lo_mask = (uint32_t(1) << nb) - 1;
    BoolFun g(f.dim() - 1), h(f.dim() - 1);
    for (uint32_t j = 0; j < g.size(); ++j) {
        uint32_t lo = j & lo_mask;
        uint32_t hi = (j & ~lo_mask) << 1;
        if (f.test(hi | lo)) g.set(j, true);                          // bit = 0: x = +1
        if (f.test(hi | (uint32_t(1) << nb) | lo)) h.set(j, true);    // bit = 1: x = -1
    }
    return {std::move(g), std::move(h)};
}

// support files: one decimal point index per line, sorted on output
inline std::vector<uint32_t> sorted_support(const BoolFun& f) { return f.support(); }

}  // namespace w1
