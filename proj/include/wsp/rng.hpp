#pragma once

#include <cstdint>
#include <random>

namespace wsp {

// Seeded RNG wrapper. Bounded draws avoid std::uniform_int_distribution,
// whose output is not pinned by the standard; generator files must be
// byte-identical for a given seed regardless of the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    int next_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Bernoulli with probability p.
    bool next_coin(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace wsp
