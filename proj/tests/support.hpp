#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "stagxx/model.hpp"

namespace stagxx::test {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Fixed seeds keep every randomized property test reproducible.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    // J = 1 with j, B, b in [0, hi), kept at least `gap` away from both critical
    // fields and from |j| = J.
    ChainParams off_critical(double hi = 2.0, double gap = 1e-3) {
        for (;;) {
            const ChainParams p(1.0, uniform(0.0, hi), uniform(0.0, hi), uniform(0.0, hi));
            const auto c = critical_fields(p);
            if (std::abs(p.j() - 1.0) < gap) continue;
            if (std::abs(std::abs(p.B()) - c.uniform) < gap || std::abs(std::abs(p.B()) - c.staggered) < gap) continue;
            return p;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace stagxx::test
