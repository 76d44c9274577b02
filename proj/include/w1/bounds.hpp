#pragma once

// Closed-form and 1-D-optimized upper bounds on the maximal level-1 Fourier
// weight W(a) of density-a Boolean functions, plus the lower-bound witnesses
// (Hamming-ball limit, subcubes) and the comparison-table generator.

#include "w1/rational.hpp"
#include "w1/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

namespace w1 {

// 2 a^2 ln(1/a) on (0, 1/2]
inline double chang_bound(double a) {
    if (!(a > 0.0 && a <= 0.5))
        throw std::domain_error("chang_bound: a must lie in (0, 1/2]");
    return 2.0 * a * a * std::log(1.0 / a);
}

// linear-programming bound: 2 a^2 (1/sqrt(a) - 1) below 1/4, a/2 above
inline double lp_bound(double a) {
    if (!(a > 0.0 && a <= 0.5))
        throw std::domain_error("lp_bound: a must lie in (0, 1/2]");
    if (a <= 0.25) return 2.0 * a * a * (1.0 / std::sqrt(a) - 1.0);
    return a / 2.0;
}

// trivial half-density bound phi(t) = min(t, 1-t)/2
inline double phi_trivial(double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::domain_error("phi_trivial: t must lie in [0,1]");
    return std::min(t, 1.0 - t) / 2.0;
}

// The profile bound: I_w^2 on [0, T], t/2 on (T, 1/2]; arguments above 1/2
// evaluate by the symmetry chi(t) = chi(1 - t).
inline double chi(double a, const ProfileParams& params) {
    if (!(a >= 0.0 && a <= 1.0))
        throw std::domain_error("chi: a must lie in [0,1]");
    double t = std::min(a, 1.0 - a);
    if (t <= params.T) return sq(gauss_iso_scaled(t, params.w));
    return t / 2.0;
}

// Khintchine-based bound on W as a function of the largest coefficient beta
inline double khintchine_bound(double beta) {
    if (!(beta >= 0.0 && beta <= 0.5))
        throw std::domain_error("khintchine_bound: beta must lie in [0, 1/2]");
    double c = kInvSqrt2Pi;                     // 1/sqrt(2 pi)
    double inner = 4.0 * (0.5 - c) * beta + c * c;
    return 0.25 * sq(std::sqrt(inner) + c);
}

struct ChiTilde {
    double value = 0.0;       // reported bound, clamped by phi_trivial
    double beta_star = 0.0;   // argmax of the beta-optimization
    double unclamped = 0.0;   // raw optimizer value (can exceed a/2 mid-range)
};

namespace detail {

inline double chi_tilde_objective(double a, double beta, const ProfileParams& p) {
    double first = 0.25 * sq(std::sqrt(chi(a + beta, p)) + std::sqrt(chi(a - beta, p))) + beta * beta;
    return std::min(first, khintchine_bound(beta));
}

}  // namespace detail

// max over beta in [0, a] of min{first-term, khintchine}. Grid scan, exact
// evaluation at the kink beta = 1/2 - a and both endpoints, then
// golden-section refinement around the best grid point; ties toward smaller
// beta. The reported value is additionally capped by phi_trivial(a), which
// the optimized expression may exceed in the mid-density range.
inline ChiTilde chi_tilde(double a, const ProfileParams& params) {
    if (!(a >= 0.0 && a <= 0.5))
        throw std::domain_error("chi_tilde: a must lie in [0, 1/2]");
    ChiTilde out;
    if (a == 0.0) return out;

    auto obj = [&](double b) { return detail::chi_tilde_objective(a, b, params); };

    constexpr int kGrid = 2048;
    double best_v = -1.0, best_b = 0.0;
    int best_i = 0;
    for (int i = 0; i <= kGrid; ++i) {
        double b = a * double(i) / kGrid;
        double v = obj(b);
        if (v > best_v) { best_v = v; best_b = b; best_i = i; }
    }

    // golden-section maximization on the bracketing interval
    double lo = a * double(std::max(0, best_i - 1)) / kGrid;
    double hi = a * double(std::min(kGrid, best_i + 1)) / kGrid;
    constexpr double kGr = 0.6180339887498948482;
    double x1 = hi - kGr * (hi - lo), x2 = lo + kGr * (hi - lo);
    double f1 = obj(x1), f2 = obj(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + kGr * (hi - lo); f2 = obj(x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - kGr * (hi - lo); f1 = obj(x1);
        }
    }
    // candidates the grid can miss by a first-order error: the chi kink and
    // the exact endpoint
    std::vector<std::pair<double, double>> cands = {{best_b, best_v}, {x1, f1}, {x2, f2}, {a, obj(a)}, {0.0, obj(0.0)}};
    double kink = 0.5 - a;
    if (kink > 0.0 && kink < a) cands.emplace_back(kink, obj(kink));

    double vmax = -1.0;
    for (auto& [b, v] : cands) vmax = std::max(vmax, v);
    double bsel = std::numeric_limits<double>::infinity();
    for (auto& [b, v] : cands)
        if (v >= vmax - 1e-12) bsel = std::min(bsel, b);

    out.unclamped = vmax;
    out.beta_star = bsel;
    out.value = std::min(vmax, phi_trivial(a));
    return out;
}

// n a^2 (1 - 2 H^-1(1 - (1/n) log2(1/a)))^2
inline double strong_bound(uint64_t n, double a) {
    if (n < 1) throw std::domain_error("strong_bound: n must be >= 1");
    if (!(a > 0.0 && a <= 0.5))
        throw std::domain_error("strong_bound: a must lie in (0, 1/2]");
    double u = std::log2(1.0 / a) / double(n);
    if (u > 1.0) throw std::domain_error("strong_bound: a below 2^-n");
    return double(n) * a * a * sq(1.0 - 2.0 * binary_entropy_inv(1.0 - u));
}

// balanced-function bound beta^2 + chi(1/2 - beta)
inline double fkn_bound(double beta, const ProfileParams& params) {
    if (!(beta >= 0.0 && beta <= 0.5))
        throw std::domain_error("fkn_bound: beta must lie in [0, 1/2]");
    return beta * beta + chi(0.5 - beta, params);
}

// W_1 of a codimension-k subcube (density 2^-k), independent of the ambient
// dimension: k 4^-k
inline double subcube_w1(int k) {
    if (k < 0) throw std::domain_error("subcube_w1: k must be >= 0");
    return double(k) * std::ldexp(1.0, -2 * k);
}

// Hamming-ball limit J(a) = I(a)^2
inline double ball_w1_limit(double a) {
    if (!(a >= 0.0 && a <= 1.0))
        throw std::domain_error("ball_w1_limit: a must lie in [0,1]");
    return sq(gauss_iso(a));
}

// exact W_1 of the ball {sum x_i >= k - 2r} in dimension k: every coordinate
// coefficient equals 2^-k C(k-1, r)
inline Rat ball_w1_exact(int k, int r) {
    if (k < 1 || r < 0 || r >= k)
        throw std::out_of_range("ball_w1_exact: need 0 <= r < k");
    BigInt c = binomial(unsigned(k - 1), unsigned(r));
    return Rat(BigInt(k) * c * c, pow2(unsigned(2 * k)));
}

struct LogAsymptotics {
    double ln_chang = 0.0;
    double ln_ball = 0.0;   // ln J(e^-t)
    double ln_chi = 0.0;
};

inline LogAsymptotics log_asymptotics(double t, const ProfileParams& params) {
    double a = std::exp(-t);
    if (!(a < params.T))
        throw std::domain_error("log_asymptotics: need e^-t < T");
    LogAsymptotics out;
    out.ln_chang = -2.0 * t + std::log(2.0 * t);
    out.ln_ball = 2.0 * std::log(gauss_iso(a));
    out.ln_chi = 2.0 * std::log(gauss_iso_scaled(a, params.w));
    return out;
}

struct BoundTableOptions {
    uint64_t strong_n = 1000;    // dimension used for the strong-bound column
    bool with_chi_tilde = true;  // the only expensive column
};

// One named column per bound over a common grid of densities. Dyadic-only
// columns (subcube) hold NaN elsewhere; NaN renders as an empty CSV cell.
struct BoundReport {
    std::vector<double> grid;
    std::vector<std::pair<std::string, std::vector<double>>> columns;
    bool sandwich_ok = true;        // lower-bound witnesses below upper bounds
    double worst_sandwich_margin = 0.0;
};

inline BoundReport bound_table(const std::vector<double>& grid,
                               const ProfileParams& params,
                               const BoundTableOptions& opt = {}) {
    BoundReport rep;
    rep.grid = grid;
    size_t N = grid.size();
    std::vector<double> v_chang(N), v_lp(N), v_chi(N), v_ct(N), v_ball(N), v_strong(N),
        v_sub(N, std::numeric_limits<double>::quiet_NaN());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    double worst = std::numeric_limits<double>::infinity();
    for (size_t idx = 0; idx < N; ++idx) {
        double a = grid[idx];
        if (!(a > 0.0 && a <= 0.5))
            throw std::domain_error("bound_table: grid points must lie in (0, 1/2]");
        v_chang[idx] = chang_bound(a);
        v_lp[idx] = lp_bound(a);
        v_chi[idx] = chi(a, params);
        v_ct[idx] = opt.with_chi_tilde ? chi_tilde(a, params).value : nan;
        v_ball[idx] = ball_w1_limit(a);
        double u = std::log2(1.0 / a) / double(opt.strong_n);
        v_strong[idx] = u <= 1.0 ? strong_bound(opt.strong_n, a) : nan;
        for (int k = 1; k <= 26; ++k) {
            if (std::abs(a * std::ldexp(1.0, k) - 1.0) <= 1e-12) {
                v_sub[idx] = subcube_w1(k);
                break;
            }
        }
        double lower = v_ball[idx];
        if (!std::isnan(v_sub[idx])) lower = std::max(lower, v_sub[idx]);
        double upper = std::min(v_chi[idx], opt.with_chi_tilde ? v_ct[idx] : v_chi[idx]);
        double margin = upper - lower;
        worst = std::min(worst, margin);
        if (margin < -1e-9) rep.sandwich_ok = false;
    }
    rep.worst_sandwich_margin = worst;
    rep.columns.emplace_back("chang", std::move(v_chang));
    rep.columns.emplace_back("lp", std::move(v_lp));
    rep.columns.emplace_back("chi", std::move(v_chi));
    rep.columns.emplace_back("chi_tilde", std::move(v_ct));
    rep.columns.emplace_back("ball_J", std::move(v_ball));
    rep.columns.emplace_back("strong_n" + std::to_string(opt.strong_n), std::move(v_strong));
    rep.columns.emplace_back("subcube", std::move(v_sub));
    return rep;
}

}  // namespace w1
