#include "w1/boolfn.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>

using namespace w1;

namespace {

// brute-force coefficient straight from the definition, independent of the
// butterfly: f_hat(S) = 2^-n sum_i f(i) (-1)^popcount(i & S)
double coeff_oracle(const BoolFun& f, uint32_t S) {
    double acc = 0.0;
    for (uint32_t i = 0; i < f.size(); ++i)
        if (f.test(i)) acc += (std::popcount(i & S) & 1) ? -1.0 : 1.0;
    return std::ldexp(acc, -f.dim());
}

BoolFun maj3() { return BoolFun::hamming_ball(3, 1); }

}  // namespace

TEST_CASE("from_support basics") {
    auto f = BoolFun::from_support(1, {0});
    CHECK(f.mean() == 0.5);
    CHECK(f.test(0));
    CHECK(!f.test(1));
    CHECK(BoolFun::from_support(2, {}).mean() == 0.0);
    CHECK(BoolFun::from_support(3, {0, 1, 2, 3, 4, 5, 6, 7}).mean() == 1.0);
    CHECK_THROWS_AS(BoolFun::from_support(2, {4}), std::out_of_range);
}

TEST_CASE("wht on the dictator and majority") {
    auto d = BoolFun::dictator(1, 1);
    auto s = wht(d);
    CHECK(s.coeff(0) == 0.5);
    CHECK(s.coeff(1) == 0.5);

    auto m = maj3();
    CHECK(m.mean() == 0.5);
    auto sm = wht(m);
    CHECK(sm.coeff(0) == Catch::Approx(0.5).margin(1e-15));
    for (uint32_t e : {1u, 2u, 4u}) CHECK(sm.coeff(e) == Catch::Approx(0.25).margin(1e-15));
    CHECK(sm.coeff(7) == Catch::Approx(-0.25).margin(1e-15));
    // every coefficient against the definitional oracle
    for (uint32_t S = 0; S < 8; ++S)
        CHECK(sm.coeff(S) == Catch::Approx(coeff_oracle(m, S)).margin(1e-15));

    auto z = wht(BoolFun::zero(3));
    for (double c : z.coeffs) CHECK(c == 0.0);
}

TEST_CASE("wht against the oracle on random functions") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        auto f = BoolFun::random_fn(5, 11 + seed, seed);
        auto s = wht(f);
        for (uint32_t S = 0; S < 32; ++S)
            CHECK(s.coeff(S) == Catch::Approx(coeff_oracle(f, S)).margin(1e-13));
    }
}

TEST_CASE("unnormalized transform is an involution up to 2^n") {
    auto f = BoolFun::random_fn(6, 23, 99);
    auto s = wht(f);   // normalized by 2^-n
    // applying the same butterfly to the coefficients recovers 2^n * 2^-n * f
    Spectrum t = s;
    uint32_t N = f.size();
    for (uint32_t len = 1; len < N; len <<= 1)
        for (uint32_t i = 0; i < N; i += len << 1)
            for (uint32_t j = i; j < i + len; ++j) {
                double u = t.coeffs[j], v = t.coeffs[j + len];
                t.coeffs[j] = u + v;
                t.coeffs[j + len] = u - v;
            }
    for (uint32_t i = 0; i < N; ++i)
        CHECK(t.coeffs[i] == Catch::Approx(f.test(i) ? 1.0 : 0.0).margin(1e-10));
}

TEST_CASE("level weights: Parseval split and known values") {
    auto sm = wht(maj3());
    CHECK(level_weight(sm, 1) == Catch::Approx(3.0 / 16).margin(1e-15));
    CHECK(level_weight(sm, 0) == Catch::Approx(0.25).margin(1e-15));

    // W_1 of a codimension-3 subcube indicator is 3/64 in any ambient dimension
    auto sub = BoolFun::from_support(5, {0, 8, 16, 24});   // x1=x2=x3=+1 inside n=5
    CHECK(sub.mean() == 0.125);
    CHECK(level_weight(wht(sub), 1) == Catch::Approx(3.0 / 64).margin(1e-15));

    for (uint64_t seed = 1; seed <= 20; ++seed) {
        int n = 1 + int(seed % 10);
        uint64_t N = uint64_t(1) << n;
        auto f = BoolFun::random_fn(n, (seed * 7) % (N + 1), seed);
        auto s = wht(f);
        double a = f.mean();
        CHECK(level_weight(s, 0) == Catch::Approx(a * a).margin(1e-12));
        double total = 0.0;
        for (int k = 0; k <= n; ++k) total += level_weight(s, k);
        CHECK(total == Catch::Approx(a).margin(1e-12));
        double parseval = 0.0;
        for (double c : s.coeffs) parseval += c * c;
        CHECK(parseval == Catch::Approx(a).margin(1e-12));
    }
}

TEST_CASE("average distance: singleton, pair, full cube") {
    CHECK(avg_distance(BoolFun::from_support(3, {5})) == 0.0);
    // two points at Hamming distance 2: ordered pairs (0+2+2+0)/4 = 1
    CHECK(avg_distance(BoolFun::from_support(3, {0, 3})) == 1.0);
    CHECK(avg_distance(BoolFun::ones(4)) == 2.0);
    CHECK_THROWS_AS(avg_distance(BoolFun::zero(3)), std::domain_error);
}

TEST_CASE("weight-distance identity holds for every function") {
    CHECK(check_wd_identity(BoolFun::from_support(3, {6})) <= 1e-15);
    CHECK(check_wd_identity(maj3()) <= 1e-14);
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        int n = 1 + int(seed % 8);
        uint64_t N = uint64_t(1) << n;
        uint64_t m = 1 + (seed * 13) % N;
        CHECK(check_wd_identity(BoolFun::random_fn(n, m, seed)) <= 1e-12);
    }
    // singleton at n=3: W_1 = 3/64 = a^2 n exactly
    auto single = wht(BoolFun::from_support(3, {0}));
    CHECK(level_weight(single, 1) == Catch::Approx(3.0 / 64).margin(1e-16));
}

TEST_CASE("decompose: restrictions, reconstruction, coefficient identities") {
    auto d = BoolFun::dictator(3, 1);
    auto [g, h] = decompose(d, 1);
    CHECK(g.mean() == 1.0);
    CHECK(h.mean() == 0.0);

    auto m = maj3();
    auto [g3, h3] = decompose(m, 3);
    CHECK(g3.mean() == 0.75);   // OR-like restriction
    CHECK(h3.mean() == 0.25);   // AND-like restriction

    for (uint64_t seed = 1; seed <= 30; ++seed) {
        int n = 2 + int(seed % 7);
        auto f = BoolFun::random_fn(n, (seed * 5) % (uint64_t(1) << n), seed ^ 0xabc);
        int coord = 1 + int(seed % n);
        auto [gg, hh] = decompose(f, coord);
        CHECK(f.mean() == Catch::Approx((gg.mean() + hh.mean()) / 2).margin(1e-16));

        // reconstruction is exact
        int nb = coord - 1;
        uint32_t lo_mask = (uint32_t(1) << nb) - 1;
        for (uint32_t j = 0; j < gg.size(); ++j) {
            uint32_t lo = j & lo_mask, hi = (j & ~lo_mask) << 1;
            CHECK(f.test(hi | lo) == gg.test(j));
            CHECK(f.test(hi | (uint32_t(1) << nb) | lo) == hh.test(j));
        }

        // spectral split: f_hat(coord) = (Eg - Eh)/2, and for masks not
        // containing coord, f_hat = (g_hat + h_hat)/2
        auto sf = wht(f);
        auto sg = wht(gg);
        auto sh = wht(hh);
        CHECK(sf.coeff(uint32_t(1) << nb) ==
              Catch::Approx((gg.mean() - hh.mean()) / 2).margin(1e-13));
        for (uint32_t S = 0; S < gg.size(); ++S) {
            uint32_t lifted = ((S & ~lo_mask) << 1) | (S & lo_mask);
            CHECK(sf.coeff(lifted) ==
                  Catch::Approx((sg.coeff(S) + sh.coeff(S)) / 2).margin(1e-13));
        }
    }
    CHECK_THROWS_AS(decompose(maj3(), 4), std::out_of_range);
}

TEST_CASE("random_fn: support size, determinism, range") {
    CHECK(BoolFun::random_fn(3, 0, 5).mean() == 0.0);
    CHECK(BoolFun::random_fn(3, 8, 5).mean() == 1.0);
    auto a = BoolFun::random_fn(4, 5, 42);
    auto b = BoolFun::random_fn(4, 5, 42);
    CHECK(a == b);
    CHECK(a.support_size() == 5);
    auto c = BoolFun::random_fn(4, 5, 43);
    CHECK(!(a == c));   // different seed, almost surely different support
    CHECK_THROWS_AS(BoolFun::random_fn(3, 9, 1), std::out_of_range);
}
