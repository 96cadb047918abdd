#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "corrsens/types.hpp"

namespace corrsens {

// splitmix64 finalizer, used to derive independent per-trial seeds so that
// parallel execution cannot reorder the streams.
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k1,
                                    std::uint64_t k2 = 0,
                                    std::uint64_t k3 = 0) noexcept {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ k1);
    h = splitmix64(h ^ k2);
    h = splitmix64(h ^ k3);
    return h;
}

// Seedable generator with portable output streams: the mt19937_64 engine is
// pinned by the C++ standard, and every distribution below is an explicit
// transform of its raw 64-bit words (no implementation-defined
// std::*_distribution involved). Identical seeds give identical sequences on
// every platform.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0, 1), 53-bit resolution
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // uniform integer in [0, n); the modulo bias of at most n / 2^64 is
    // irrelevant for index selection
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    // Box-Muller transform; both normals of the pair are returned
    std::pair<double, double> normal_pair() {
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const auto [a, b] = normal_pair();
        spare_ = b;
        have_spare_ = true;
        return a;
    }

    // Marsaglia-Tsang sampler; Gamma(alpha, 1) for alpha > 0
    double gamma(double alpha) {
        if (!(alpha > 0.0)) {
            throw InputError("gamma shape must be positive");
        }
        if (alpha < 1.0) {
            // boost to alpha + 1 and scale back
            const double u = uniform01();
            return gamma(alpha + 1.0) * std::pow(u, 1.0 / alpha);
        }
        const double d = alpha - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x;
            double v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 &&
                std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
                return d * v;
            }
        }
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace corrsens
