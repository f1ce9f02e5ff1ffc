#pragma once

#include <cstdint>
#include <random>

namespace lmapf {

// Seeded RNG with hand-rolled bounded sampling. std::uniform_int_distribution
// is implementation-defined, which would break the bit-reproducibility
// contract across standard libraries; the mt19937_64 engine itself is fully
// specified, so only the distributions are replaced.
class Rng {
  public:
    explicit Rng(uint64_t seed) : seed_(seed), engine_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t next() { return engine_(); }

    // Uniform in [0, n); rejection sampling keeps it unbiased.
    uint64_t bounded(uint64_t n) {
        if (n == 0) return 0;
        const uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int>(bounded(static_cast<uint64_t>(hi - lo) + 1));
    }

    // Uniform real in [lo, hi) with 53-bit resolution.
    double uniform_real(double lo, double hi) {
        double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    bool chance(double p) { return uniform_real(0.0, 1.0) < p; }

    // Deterministic stream derivation (splitmix64 finalizer); gives parallel
    // workers and per-agent policies independent seeds from one master seed.
    static uint64_t mix(uint64_t seed, uint64_t key) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (key + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    Rng split(uint64_t key) const { return Rng(mix(seed_, key)); }

  private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace lmapf
