#pragma once

// Dimension machinery over F_2^n: epsilon-spectra, GF(2) rank of the spanned
// frequency set, the two dimension bounds, and the sharp threshold via soft
// Hamming-ball indicators in exact big-integer rationals.
//
// Spectrum membership is strict: |f_hat(y)| > eps * ||f||_1. Comparisons run
// in exact integer arithmetic against the epsilon supplied as a rational (a
// double argument is taken at its exact binary value), so equality cases are
// excluded reliably.

#include "w1/boolfn.hpp"
#include "w1/bounds.hpp"
#include "w1/rational.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace w1 {

struct SpecSet {
    int n = 0;
    double epsilon = 0.0;
    std::vector<uint32_t> members;   // frequency masks with |f_hat| > eps * a
    int dimension = 0;               // GF(2) rank of members
    std::vector<uint32_t> basis;     // maximal independent subset of members
};

// rank over GF(2) by elimination; basis returned as original members
inline std::pair<int, std::vector<uint32_t>> gf2_rank(const std::vector<uint32_t>& masks, int n) {
    std::vector<uint32_t> pivots;          // reduced pivot rows
    std::vector<uint32_t> basis;           // original masks that created pivots
    for (uint32_t mask : masks) {
        if (mask >= (uint32_t(1) << n) && n < 32)
            throw std::out_of_range("gf2_rank: mask out of range");
        uint32_t v = mask;
        for (uint32_t p : pivots) v = std::min(v, v ^ p);
        if (v != 0) {
            pivots.push_back(v);
            basis.push_back(mask);
        }
    }
    return {int(pivots.size()), basis};
}

namespace detail {

// integer transform values: T(y) = sum_x f(x) (-1)^popcount(x & y) = 2^n f_hat(y)
inline std::vector<int64_t> integer_transform(const BoolFun& f) {
    uint32_t N = f.size();
    std::vector<int64_t> t(N);
    for (uint32_t i = 0; i < N; ++i) t[i] = f.test(i) ? 1 : 0;
    for (uint32_t len = 1; len < N; len <<= 1)
        for (uint32_t i = 0; i < N; i += len << 1)
            for (uint32_t j = i; j < i + len; ++j) {
                int64_t u = t[j], v = t[j + len];
                t[j] = u + v;
                t[j + len] = u - v;
            }
    return t;
}

// strict membership test on exact integers: |T(y)| * den > num * m
inline bool spec_member(int64_t t, uint64_t m, int64_t num, int64_t den) {
    unsigned __int128 lhs = (unsigned __int128)(t < 0 ? -t : t) * (unsigned __int128)den;
    unsigned __int128 rhs = (unsigned __int128)num * (unsigned __int128)m;
    return lhs > rhs;
}

}  // namespace detail

// epsilon given as an exact rational num/den
inline SpecSet spec_set(const BoolFun& f, int64_t eps_num, int64_t eps_den) {
    if (eps_den <= 0 || eps_num <= 0 || eps_num > eps_den)
        throw std::domain_error("spec_set: epsilon must lie in (0,1]");
    uint64_t m = f.support_size();
    if (m == 0) throw std::domain_error("spec_set: empty support");
    SpecSet out;
    out.n = f.dim();
    out.epsilon = double(eps_num) / double(eps_den);
    auto t = detail::integer_transform(f);
    for (uint32_t y = 0; y < f.size(); ++y)
        if (detail::spec_member(t[y], m, eps_num, eps_den)) out.members.push_back(y);
    auto [rank, basis] = gf2_rank(out.members, out.n);
    out.dimension = rank;
    out.basis = std::move(basis);
    return out;
}

// double epsilon taken at its exact binary value
inline SpecSet spec_set(const BoolFun& f, double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw std::domain_error("spec_set: epsilon must lie in (0,1]");
    int exp = 0;
    double mant = std::frexp(epsilon, &exp);   // epsilon = mant * 2^exp, mant in [1/2, 1)
    int64_t num = int64_t(std::ldexp(mant, 53));
    int shift = 53 - exp;                      // epsilon = num / 2^shift
    while ((num & 1) == 0 && shift > 0) { num >>= 1; --shift; }
    if (shift <= 62) return spec_set(f, num, int64_t(1) << shift);

    // tiny epsilon with a long mantissa: exact comparison in big integers
    uint64_t m = f.support_size();
    if (m == 0) throw std::domain_error("spec_set: empty support");
    SpecSet out;
    out.n = f.dim();
    out.epsilon = epsilon;
    BigInt bnum(num), rhs = bnum * m;
    auto t = detail::integer_transform(f);
    for (uint32_t y = 0; y < f.size(); ++y) {
        BigInt lhs = BigInt(t[y] < 0 ? -t[y] : t[y]) << unsigned(shift);
        if (lhs > rhs) out.members.push_back(y);
    }
    auto [rank, basis] = gf2_rank(out.members, out.n);
    out.dimension = rank;
    out.basis = std::move(basis);
    return out;
}

// 2 eps^-2 ln(1/a), natural log
inline double chang_dim_bound(double a, double eps) {
    if (!(a > 0.0 && a <= 1.0))
        throw std::domain_error("chang_dim_bound: a must lie in (0,1]");
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::domain_error("chang_dim_bound: eps must lie in (0,1]");
    return 2.0 * std::log(1.0 / a) / (eps * eps);
}

// min(chi, chi_tilde)(min(a,1-a)) / (a^2 eps^2); valid since the numerator
// upper-bounds the maximal level-1 weight at density a
inline double lemma6_bound(double a, double eps, const ProfileParams& params) {
    if (!(a > 0.0 && a < 1.0))
        throw std::domain_error("lemma6_bound: a must lie in (0,1)");
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::domain_error("lemma6_bound: eps must lie in (0,1]");
    double t = std::min(a, 1.0 - a);
    double num = std::min(chi(t, params), chi_tilde(t, params).value);
    return num / (a * a * eps * eps);
}

// h(x) = 1{sum_{i<=k} x_i > b} + lambda 1{sum x_i = b} with E h = a, exact
struct SoftBall {
    int k = 0;
    long long b = 0;      // boundary level, same parity as k
    Rat lambda;           // boundary weight in (0, 1]
    Rat a;                // mean, exactly matched
};

// unique (b, lambda): b is the level with P(S > b) < a <= P(S >= b)
inline SoftBall soft_ball(int k, const Rat& a) {
    if (k < 1 || k > 64) throw std::out_of_range("soft_ball: k must be in [1,64]");
    if (!(a > Rat(0) && a <= Rat(1)))
        throw std::domain_error("soft_ball: a must lie in (0,1]");
    SoftBall sb;
    sb.k = k;
    sb.a = a;
    BigInt denom = pow2(unsigned(k));
    BigInt cum = 0;                       // counts of levels strictly above b
    for (int j = 0; j <= k; ++j) {
        BigInt level = binomial(unsigned(k), unsigned(j));
        Rat tail_with(cum + level, denom);   // P(S >= k - 2j)
        if (a <= tail_with) {
            sb.b = k - 2 * j;
            sb.lambda = (a - Rat(cum, denom)) / Rat(level, denom);
            return sb;
        }
        cum += level;
    }
    throw std::logic_error("soft_ball: unreachable");
}

// h_hat_1 = (1/k) 2^-k [ sum_{s > b} s C(k, (k-s)/2) + lambda b C(k, (k-b)/2) ]
inline Rat soft_ball_coeff(const SoftBall& sb) {
    int k = sb.k;
    BigInt acc = 0;
    for (int j = 0; (k - 2 * j) > sb.b && j <= k; ++j)
        acc += BigInt(k - 2 * j) * binomial(unsigned(k), unsigned(j));
    Rat strict(acc, BigInt(1));
    Rat boundary = sb.lambda * Rat(BigInt(sb.b) * binomial(unsigned(k), unsigned((k - sb.b) / 2)),
                                   BigInt(1));
    return (strict + boundary) / Rat(BigInt(k) * pow2(unsigned(k)), BigInt(1));
}

// largest epsilon compatible with dimension k at mean a
inline Rat sharp_eps(int k, const Rat& a) {
    return soft_ball_coeff(soft_ball(k, a)) / a;
}

// C(k-1, r) / C(k, <=r) with C(k, <=r) = sum_{j=0}^{r} C(k, j)
inline Rat ball_eps(int k, int r) {
    if (k < 1 || r < 0 || r >= k) throw std::out_of_range("ball_eps: need 0 <= r < k");
    BigInt tail = 0;
    for (int j = 0; j <= r; ++j) tail += binomial(unsigned(k), unsigned(j));
    return Rat(binomial(unsigned(k - 1), unsigned(r)), tail);
}

struct DimCheckResult {
    bool ok = true;
    uint64_t functions_checked = 0;
    std::string first_failure;
};

// Sweep every nonempty support at n <= 3 (random sample at n = 4) against
// both dimension bounds, the sharp threshold (dim >= 1 forces
// eps <= sharp_eps(dim, a), exact rationals), and the ball form of it.
inline DimCheckResult exhaustive_dim_check(int n,
                                           const std::vector<std::pair<int64_t, int64_t>>& eps_grid,
                                           const ProfileParams& params,
                                           uint64_t sample = 10000, uint64_t seed = 7) {
    if (n < 1 || n > 4) throw std::out_of_range("exhaustive_dim_check: n must be in [1,4]");
    DimCheckResult res;
    uint32_t N = uint32_t(1) << n;
    uint64_t tables = uint64_t(1) << N;

    auto fail = [&](const std::string& msg) {
        if (res.ok) res.first_failure = msg;
        res.ok = false;
    };

    auto check_one = [&](uint64_t table) {
        BoolFun f(n);
        for (uint32_t i = 0; i < N; ++i)
            if ((table >> i) & 1) f.set(i, true);
        uint64_t m = f.support_size();
        if (m == 0) return;
        ++res.functions_checked;
        Rat a{BigInt(m), pow2(unsigned(n))};
        double a_d = a.to_double();
        auto t = detail::integer_transform(f);
        for (auto [num, den] : eps_grid) {
            std::vector<uint32_t> members;
            for (uint32_t y = 0; y < N; ++y)
                if (detail::spec_member(t[y], m, num, den)) members.push_back(y);
            int dim = gf2_rank(members, n).first;
            double eps_d = double(num) / double(den);
            if (a_d < 1.0) {
                if (double(dim) > chang_dim_bound(a_d, eps_d) + 1e-9)
                    fail("entropy dimension bound violated");
                if (double(dim) > lemma6_bound(a_d, eps_d, params) + 1e-9)
                    fail("weight/dimension bound violated");
            } else if (dim > 0) {
                fail("full function with nonzero dimension");
            }
            Rat eps{BigInt(num), BigInt(den)};
            if (dim >= 1 && eps > sharp_eps(dim, a))
                fail("sharp threshold violated at realized dimension");
            // ball form: a = 2^-k C(k,<=r) and eps above the ball threshold
            // forces dimension below k
            for (int k = 1; k <= n; ++k) {
                BigInt tail = 0;
                for (int r = 0; r < k; ++r) {
                    tail += binomial(unsigned(k), unsigned(r));
                    if (a == Rat(tail, pow2(unsigned(k))) && eps > ball_eps(k, r) && dim >= k)
                        fail("ball-form threshold violated");
                }
            }
        }
    };

    if (n <= 3) {
        for (uint64_t table = 1; table < tables; ++table) check_one(table);
    } else {
        Rng rng(seed);
        while (res.functions_checked < sample) {
            uint64_t table = rng.next() & (tables - 1);
            if (table == 0) continue;
            check_one(table);
        }
    }
    return res;
}

}  // namespace w1
