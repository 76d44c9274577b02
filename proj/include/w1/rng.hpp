#pragma once

// Deterministic RNG used everywhere seeds appear in a contract. splitmix64
// streams are platform-independent, unlike the std:: distributions, so fixed
// seeds give byte-identical artifacts on every toolchain.

#include <cmath>
#include <cstdint>

namespace w1 {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {
        // warm up so that small seeds decorrelate
        splitmix64(state_);
        splitmix64(state_);
    }

    // independent substream, e.g. one per worker chunk
    Rng substream(uint64_t index) const {
        uint64_t s = state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1));
        return Rng(s);
    }

    uint64_t next() { return splitmix64(state_); }

    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // unbiased integer in [0, n) by rejection
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Box-Muller pair of standard normals
    void normal_pair(double& z0, double& z1) {
        double u1 = 0.0;
        do { u1 = u01(); } while (u1 <= 0.0);
        double u2 = u01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 6.283185307179586477 * u2;
        z0 = r * std::cos(t);
        z1 = r * std::sin(t);
    }

private:
    uint64_t state_;
};

}  // namespace w1
