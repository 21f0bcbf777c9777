#pragma once

#include <cstdint>
#include <random>

namespace dgo {

// SplitMix64 finalizer. Used to spread seeds for derived streams.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic seed for sub-stream `stream` of a master seed. Distinct
// streams get decorrelated generators while staying reproducible.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix64(master + 0x632be59bd9b4e019ull * (stream + 1));
}

// mt19937_64 with hand-rolled uniform mappings. The standard distribution
// objects are implementation-defined, so every mapping from raw 64-bit draws
// to values is spelled out here to keep runs reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    bool next_bit() { return (gen_() >> 63) != 0; }

    // Uniform in [0, 1) with 53-bit granularity.
    double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), n >= 1. Rejection sampling avoids modulo bias.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return v % n;
    }

    // Uniform in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace dgo
