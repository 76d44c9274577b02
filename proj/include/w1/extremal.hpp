#pragma once

// Ground truth at small dimension: exhaustive maximization of the level-1
// weight over all supports of a given size, in exact integer arithmetic
// (4^n W_1 = sum_i colsum_i^2), plus the self-consistency predicate for
// maximizers, the restricted search at fixed largest coefficient, and a
// threshold-function search that scales to moderate n.

#include "w1/boolfn.hpp"
#include "w1/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace w1 {

struct SearchOptions {
    int hard_cap = 4;              // exhaustive enumeration beyond this needs an override
    bool override_cap = false;
    size_t max_maximizers = 10000; // ties recorded up to this many
};

struct ExtremalResult {
    int n = 0;
    uint64_t m = 0;
    long long w1_scaled = 0;        // 4^n * W_1, exact
    double w1 = 0.0;
    Rat exact;                      // W_1 as a reduced rational
    std::vector<uint64_t> maximizers;   // point-set bitmasks (bit i = point i)
    uint64_t maximizer_count = 0;       // total ties, including truncated ones
    std::vector<char> self_consistent;  // per recorded maximizer
    bool feasible = true;               // false only for the beta-restricted search
};

namespace detail {

inline void check_search_dims(int n, uint64_t m, const SearchOptions& opt) {
    if (n < 1 || n > 6)
        throw std::out_of_range("exact search: dimension must be in [1,6]");
    if (n > opt.hard_cap && !opt.override_cap)
        throw std::runtime_error(
            "exact search: n exceeds the hard cap; pass an explicit override "
            "(enumeration cost grows as C(2^n, m))");
    if (m > (uint64_t(1) << n)) throw std::out_of_range("exact search: m exceeds 2^n");
}

// visit every m-subset of [0, N) in lexicographic order
template <class F>
inline void for_each_subset(uint32_t N, uint32_t m, F&& visit) {
    if (m > N) return;
    std::vector<uint32_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        visit(const_cast<const std::vector<uint32_t>&>(idx));
        // advance odometer
        int j = int(m) - 1;
        while (j >= 0 && idx[j] == N - m + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (uint32_t k = j + 1; k < m; ++k) idx[k] = idx[k - 1] + 1;
    }
}

inline void colsums_of(const std::vector<uint32_t>& pts, int n, int64_t* cs) {
    for (int j = 0; j < n; ++j) cs[j] = 0;
    for (uint32_t p : pts)
        for (int j = 0; j < n; ++j) cs[j] += ((p >> j) & 1) ? -1 : 1;
}

inline long long sumsq(const int64_t* cs, int n) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += cs[j] * cs[j];
    return s;
}

inline uint64_t to_mask(const std::vector<uint32_t>& pts) {
    uint64_t m = 0;
    for (uint32_t p : pts) m |= uint64_t(1) << p;
    return m;
}

}  // namespace detail

// true iff a separating threshold exists: min over the support of
// sum_i f_hat_i x_i is at least the max over the complement (exact integers).
// An all-zero coefficient vector is degenerate and counts as consistent.
inline bool self_consistency_check(const BoolFun& f) {
    auto cs = coord_colsums(f);
    int n = f.dim();
    int64_t min_in = INT64_MAX, max_out = INT64_MIN;
    for (uint32_t i = 0; i < f.size(); ++i) {
        int64_t s = 0;
        for (int j = 0; j < n; ++j) s += ((i >> j) & 1) ? -cs[j] : cs[j];
        if (f.test(i)) min_in = std::min(min_in, s);
        else max_out = std::max(max_out, s);
    }
    if (min_in == INT64_MAX || max_out == INT64_MIN) return true;  // empty or full
    return min_in >= max_out;
}

inline bool self_consistency_mask(uint64_t support_mask, int n) {
    BoolFun f(n);
    for (uint32_t i = 0; i < f.size(); ++i)
        if ((support_mask >> i) & 1) f.set(i, true);
    return self_consistency_check(f);
}

// exhaustive maximum of W_1 over all C(2^n, m) supports
inline ExtremalResult exact_max_w1(int n, uint64_t m, const SearchOptions& opt = {}) {
    detail::check_search_dims(n, m, opt);
    ExtremalResult res;
    res.n = n;
    res.m = m;
    uint32_t N = uint32_t(1) << n;
    long long best = -1;
    int64_t cs[6];
    detail::for_each_subset(N, uint32_t(m), [&](const std::vector<uint32_t>& pts) {
        detail::colsums_of(pts, n, cs);
        long long s = detail::sumsq(cs, n);
        if (s > best) {
            best = s;
            res.maximizers.clear();
            res.maximizer_count = 0;
        }
        if (s == best) {
            ++res.maximizer_count;
            if (res.maximizers.size() < opt.max_maximizers)
                res.maximizers.push_back(detail::to_mask(pts));
        }
    });
    if (best < 0) { best = 0; res.maximizer_count = 1; res.maximizers.push_back(0); }
    res.w1_scaled = best;
    res.exact = Rat(BigInt(best), pow2(unsigned(2 * n)));
    res.w1 = res.exact.to_double();
    res.self_consistent.reserve(res.maximizers.size());
    for (uint64_t mk : res.maximizers)
        res.self_consistent.push_back(self_consistency_mask(mk, n) ? 1 : 0);
    return res;
}

// every maximizer is a threshold sandwich set of its own coefficients
inline bool verify_maximizer_structure(int n, uint64_t m, const SearchOptions& opt = {}) {
    ExtremalResult r = exact_max_w1(n, m, opt);
    for (char ok : r.self_consistent)
        if (!ok) return false;
    return true;
}

// (m, max W_1) for m = 0..2^n; strictly increasing up to half density
inline std::vector<std::pair<uint64_t, Rat>> monotonicity_table(int n,
                                                                const SearchOptions& opt = {}) {
    std::vector<std::pair<uint64_t, Rat>> rows;
    uint32_t N = uint32_t(1) << n;
    for (uint64_t m = 0; m <= N; ++m)
        rows.emplace_back(m, exact_max_w1(n, m, opt).exact);
    return rows;
}

struct LtfResult {
    int n = 0;
    uint64_t m = 0;
    long long w1_scaled = 0;
    double w1 = 0.0;
    Rat exact;
    std::vector<int> weights;           // nondecreasing, gcd-reduced
    std::vector<uint32_t> support;      // the realized witness
};

// Best W_1 over supports of the form {x : sum w_i x_i > b} completed to size
// m from the boundary level, over all nonnegative nondecreasing integer
// weight vectors with entries <= weight_cap (gcd-reduced, not all zero).
// Boundary completion picks lexicographically smallest point indices. Valid
// lower bound on the unrestricted maximum; reaches it whenever a maximizer
// is realized at some enumerated weight vector under that tie-break.
inline LtfResult ltf_search(int n, uint64_t m, int weight_cap) {
    if (n < 1 || n > 16) throw std::out_of_range("ltf_search: n must be in [1,16]");
    if (weight_cap < 1) throw std::domain_error("ltf_search: weight_cap must be >= 1");
    uint32_t N = uint32_t(1) << n;
    if (m > N) throw std::out_of_range("ltf_search: m exceeds 2^n");

    LtfResult best;
    best.n = n;
    best.m = m;
    best.w1_scaled = -1;

    std::vector<int> w(n, 0);
    std::vector<uint32_t> order(N);
    std::vector<int> score(N);
    std::vector<int64_t> cs(n);

    auto evaluate = [&]() {
        int g = 0;
        for (int x : w) g = std::gcd(g, x);
        if (g != 1) return;  // skip all-zero and non-primitive vectors
        for (uint32_t i = 0; i < N; ++i) {
            int s = 0;
            for (int j = 0; j < n; ++j) s += ((i >> j) & 1) ? -w[j] : w[j];
            score[i] = s;
        }
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
            if (score[a] != score[b]) return score[a] > score[b];
            return a < b;
        });
        std::fill(cs.begin(), cs.end(), 0);
        for (uint64_t t = 0; t < m; ++t) {
            uint32_t p = order[t];
            for (int j = 0; j < n; ++j) cs[j] += ((p >> j) & 1) ? -1 : 1;
        }
        long long s2 = 0;
        for (int j = 0; j < n; ++j) s2 += cs[j] * cs[j];
        if (s2 > best.w1_scaled) {
            best.w1_scaled = s2;
            best.weights = w;
            best.support.assign(order.begin(), order.begin() + m);
            std::sort(best.support.begin(), best.support.end());
        }
    };

    // odometer over nondecreasing vectors 0 <= w_1 <= ... <= w_n <= cap
    for (;;) {
        evaluate();
        int j = n - 1;
        while (j >= 0 && w[j] == weight_cap) --j;
        if (j < 0) break;
        int v = w[j] + 1;
        for (int k = j; k < n; ++k) w[k] = v;
    }
    if (best.w1_scaled < 0) best.w1_scaled = 0;
    best.exact = Rat(BigInt(best.w1_scaled), pow2(unsigned(2 * n)));
    best.w1 = best.exact.to_double();
    return best;
}

// exhaustive maximum restricted to supports whose largest coordinate
// coefficient magnitude is exactly beta = num/den (a multiple of 2^-n)
inline ExtremalResult exact_max_w1_given_beta(int n, uint64_t m, long long num, long long den,
                                              const SearchOptions& opt = {}) {
    detail::check_search_dims(n, m, opt);
    if (den <= 0 || num < 0) throw std::invalid_argument("beta must be a nonnegative rational");
    long long scaled = num * (1LL << n);
    if (scaled % den != 0)
        throw std::invalid_argument("beta must be a multiple of 2^-n");
    long long B = scaled / den;

    ExtremalResult res;
    res.n = n;
    res.m = m;
    res.feasible = false;
    if (B > (long long)m || (B % 2) != (long long)(m % 2)) {
        // |colsum| <= m and colsum has the parity of m: no support can match
        return res;
    }
    uint32_t N = uint32_t(1) << n;
    long long best = -1;
    int64_t cs[6];
    detail::for_each_subset(N, uint32_t(m), [&](const std::vector<uint32_t>& pts) {
        detail::colsums_of(pts, n, cs);
        int64_t mx = 0;
        for (int j = 0; j < n; ++j) mx = std::max(mx, std::abs(cs[j]));
        if (mx != B) return;
        long long s = detail::sumsq(cs, n);
        if (s > best) {
            best = s;
            res.maximizers.clear();
            res.maximizer_count = 0;
        }
        if (s == best) {
            ++res.maximizer_count;
            if (res.maximizers.size() < opt.max_maximizers)
                res.maximizers.push_back(detail::to_mask(pts));
        }
    });
    if (best < 0) return res;  // infeasible, reported distinctly
    res.feasible = true;
    res.w1_scaled = best;
    res.exact = Rat(BigInt(best), pow2(unsigned(2 * n)));
    res.w1 = res.exact.to_double();
    for (uint64_t mk : res.maximizers)
        res.self_consistent.push_back(self_consistency_mask(mk, n) ? 1 : 0);
    return res;
}

}  // namespace w1
