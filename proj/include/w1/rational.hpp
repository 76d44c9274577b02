#pragma once

// Exact big-integer rationals for the combinatorial quantities (binomial
// tails, boundary weights, coefficient ratios). Thin wrapper over
// boost::multiprecision::cpp_int with canonical sign and gcd reduction.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace w1 {

using BigInt = boost::multiprecision::cpp_int;

struct Rat {
    BigInt num{0};
    BigInt den{1};

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { den = -den; num = -num; }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num * b.num, a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) {
        return a.num * b.den <= b.num * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    double to_double() const {
        return num.convert_to<double>() / den.convert_to<double>();
    }

    // rendered as "p/q" (just "p" when q == 1)
    std::string str() const {
        std::string s = num.str();
        if (den != 1) s += "/" + den.str();
        return s;
    }
};

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt pow2(unsigned e) {
    BigInt r = 1;
    return r << e;
}

// parse "p/q" or "p" (used by the CLI for exact densities and epsilons)
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s), BigInt(1));
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rat: expected \"p\" or \"p/q\", got \"" + s + "\"");
    }
}

}  // namespace w1
