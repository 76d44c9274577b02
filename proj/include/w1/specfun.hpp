#pragma once

// Scalar special functions shared by every bound: Gaussian density/CDF/quantile,
// the Gaussian isoperimetric profile I(a) = phi(Phi^-1(a)) and its scaled
// variant I_w(a) = w I(a/w), binary entropy and its inverse, and Bernoulli
// relative entropy. All functions are pure and thread-safe.

#include <cmath>
#include <limits>
#include <stdexcept>

namespace w1 {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779;
inline constexpr double kInvSqrt2 = 0.7071067811865475244;

inline double sq(double x) { return x * x; }

inline double normal_pdf(double x) {
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

// erfc keeps full relative accuracy in the lower tail; no underflow to 0
// for |x| <= 38 (the result goes subnormal first).
inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * kInvSqrt2);
}

namespace detail {

// Wichura's AS 241 rational approximations (PPND16), accurate to ~1e-16
// relative over the full open interval.
inline double ppnd16(double p) {
    double q = p - 0.5;
    if (std::abs(q) < 0.425) {
        double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r +
                    4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r +
                  1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r +
                3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r +
                    2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r +
                  6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r +
                1.0);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double x;
    if (r < 5.0) {
        r -= 1.6;
        x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r +
                 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r +
               5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r +
             1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r +
                 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r +
               1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r +
             1.0);
    } else {
        r -= 5.0;
        x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r +
                 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r +
               1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r +
             6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r +
                 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r +
               1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r +
             1.0);
    }
    return q < 0.0 ? -x : x;
}

}  // namespace detail

// Inverse standard normal CDF. AS 241 start, then Newton against the
// erfc-based CDF; keeps relative tail accuracy down to subnormal p.
inline double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("normal_quantile: p must lie in (0,1)");
    double x = detail::ppnd16(p);
    for (int i = 0; i < 2; ++i) {
        double d = normal_pdf(x);
        if (d <= 0.0) break;
        x -= (normal_cdf(x) - p) / d;
    }
    return x;
}

// Gaussian isoperimetric profile I(a) = phi(Phi^-1(a)); I(0) = I(1) = 0.
inline double gauss_iso(double a) {
    if (!(a >= 0.0 && a <= 1.0))
        throw std::domain_error("gauss_iso: a must lie in [0,1]");
    if (a == 0.0 || a == 1.0) return 0.0;
    return normal_pdf(normal_quantile(a));
}

// Scaled profile I_w(a) = w I(a/w) on [0, w]. Satisfies I_w * I_w'' = -1.
inline double gauss_iso_scaled(double a, double w) {
    if (!(w > 0.0)) throw std::domain_error("gauss_iso_scaled: w must be positive");
    if (!(a >= 0.0 && a <= w))
        throw std::domain_error("gauss_iso_scaled: a must lie in [0,w]");
    return w * gauss_iso(a / w);
}

// I_w'(a) = -Phi^-1(a/w); decreasing, positive while a/w < 1/2.
inline double iso_slope(double a, double w) {
    if (!(w > 0.0 && a > 0.0 && a < w))
        throw std::domain_error("iso_slope: need 0 < a < w");
    return -normal_quantile(a / w);
}

// Unique w with I_w(T) = sqrt(T/2), found by bisection on [1,2].
inline double solve_w(double T) {
    if (!(T > 0.0 && T <= 0.25))
        throw std::domain_error("solve_w: T must lie in (0, 1/4]");
    const double target = std::sqrt(T / 2.0);
    auto f = [&](double w) { return gauss_iso_scaled(T, w) - target; };
    double lo = 1.0, hi = 2.0;
    double flo = f(lo), fhi = f(hi);
    if (!(flo < 0.0 && fhi > 0.0))
        throw std::runtime_error("solve_w: no sign change on [1,2]; check T");
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Binary entropy, base 2. H(0) = H(1) = 0.
inline double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("binary_entropy: p must lie in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

// Inverse of H on [0, 1/2].
inline double binary_entropy_inv(double y) {
    if (!(y >= 0.0 && y <= 1.0))
        throw std::domain_error("binary_entropy_inv: y must lie in [0,1]");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (binary_entropy(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Relative entropy D(p || q) between Bernoulli(p) and Bernoulli(q), nats.
inline double kl_bernoulli(double p, double q) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("kl_bernoulli: p must lie in [0,1]");
    if (q == 0.0 || q == 1.0) {
        if (p == q) return 0.0;
        throw std::domain_error("kl_bernoulli: q on the boundary with p != q");
    }
    if (!(q > 0.0 && q < 1.0))
        throw std::domain_error("kl_bernoulli: q must lie in (0,1)");
    double s = 0.0;
    if (p > 0.0) s += p * std::log(p / q);
    if (p < 1.0) s += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
    return s;
}

// Upsilon(b) = inf over |lambda - mu|_1 = b of D(lambda || mu) = D((1-b)/2 || 1/2).
inline double upsilon(double b) {
    if (!(b >= 0.0 && b <= 1.0))
        throw std::domain_error("upsilon: b must lie in [0,1]");
    return kl_bernoulli((1.0 - b) / 2.0, 0.5);
}

// Threshold T together with the solved scale w; the pair every profile-based
// bound evaluates against.
struct ProfileParams {
    double T = 0.21;
    double w = 0.0;

    static ProfileParams make(double T = 0.21) {
        ProfileParams p;
        p.T = T;
        p.w = solve_w(T);
        double residual = gauss_iso_scaled(T, p.w) - std::sqrt(T / 2.0);
        if (std::abs(residual) > 1e-12)
            throw std::logic_error("ProfileParams: scale residual out of tolerance");
        return p;
    }
};

}  // namespace w1
