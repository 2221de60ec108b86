#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "qnogo/matrix.hpp"

namespace qnogo {

/// splitmix64 step; used to derive independent per-trial seeds from one
/// master seed without correlated streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random source. Distributions are hand-rolled on top of the
/// raw mt19937_64 stream so output bytes match across standard libraries.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; generates pairs and caches the spare.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        if (u1 <= 0.0)
            u1 = 0x1.0p-53; // log argument must stay positive
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Standard complex normal: independent N(0,1) real and imaginary parts.
    cplx complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return cplx(re, im);
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace qnogo
