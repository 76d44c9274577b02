#include "w1/euclid.hpp"

#include "reference.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace w1;

TEST_CASE("radius for measure: known closed forms") {
    // dim 2, origin: P(||X|| <= r) = 1 - exp(-r^2/2) = 1/2  =>  r = sqrt(2 ln 2)
    double r = ball_radius_for_measure(2, {0.0, 0.0}, 0.5);
    CHECK(r == Catch::Approx(ref::euclid_radius_origin).margin(2e-5));
    // dim 1, origin: 2 Phi(r) - 1 = 1/2
    double r1 = ball_radius_for_measure(1, {0.0}, 0.5);
    CHECK(r1 == Catch::Approx(normal_quantile(0.75)).margin(1e-10));
    CHECK_THROWS_AS(ball_radius_for_measure(2, {0.0, 0.0}, 1.5), std::domain_error);
    CHECK_THROWS_AS(ball_radius_for_measure(2, {0.0}, 0.5), std::invalid_argument);
}

TEST_CASE("origin ball estimate matches the chi-square oracle") {
    auto est = euclid_mc(2, {0.0, 0.0}, 0.5, 400000, 11);
    // oracle: D^2 = 2 E[Y | Y <= 2 ln 2] for Y ~ chi^2_2, i.e. 4 (1 - ln 2)
    CHECK(std::abs(est.mean - ref::euclid_origin_d2) <= 4 * est.std_error);
    CHECK(est.std_error > 0.0);
    CHECK(est.std_error < 0.01);
    CHECK(est.samples <= 400000);
}

TEST_CASE("determinism for a fixed seed") {
    auto a = euclid_mc(2, {0.0, 0.0}, 0.5, 50000, 123);
    auto b = euclid_mc(2, {0.0, 0.0}, 0.5, 50000, 123);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    auto c = euclid_mc(2, {0.0, 0.0}, 0.5, 50000, 124);
    CHECK(a.mean != c.mean);
}

TEST_CASE("off-center balls have strictly larger spread") {
    auto origin = euclid_mc(2, {0.0, 0.0}, 0.5, 200000, 5);
    auto offset = euclid_mc(2, {1.0, 0.0}, 0.5, 200000, 5);
    double margin = offset.mean - origin.mean;
    double se = std::hypot(origin.std_error, offset.std_error);
    CHECK(margin > 3 * se);
    // quadrature reference for the offset ball: 1.60178632587
    CHECK(std::abs(offset.mean - 1.60178632587) <= 4 * offset.std_error);
}

TEST_CASE("dimension 3 and the MC radius path agree with quadrature") {
    double r3 = ball_radius_for_measure(3, {0.0, 0.0, 0.0}, 0.5);
    // chi^2_3 median = 2.365973884375338
    CHECK(r3 == Catch::Approx(std::sqrt(2.365973884375338)).margin(2e-4));
    double r4 = ball_radius_for_measure(4, {0.0, 0.0, 0.0, 0.0}, 0.5, 77);
    // chi^2_4 median = 3.356694972055785
    CHECK(r4 == Catch::Approx(std::sqrt(3.356694972055785)).margin(2e-2));
    CHECK_THROWS_AS(euclid_mc(2, {0.0, 0.0}, 0.5, 100, 1), std::domain_error);
}
