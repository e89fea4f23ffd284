// Seeded random generation. All randomized operations in the library take an
// explicit Rng so runs are reproducible from their seed.
#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace exag {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, n) by rejection, so results depend only on the engine
    // stream and not on any library distribution implementation.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % n;
    }

    bool flip() { return (gen_() & 1u) != 0; }

private:
    std::mt19937_64 gen_;
};

// Stable per-check seed derivation (FNV-1a over the name, mixed with the
// master seed).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view name) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    h ^= master + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h == 0 ? 0x853c49e6748fea9bull : h;
}

} // namespace exag
