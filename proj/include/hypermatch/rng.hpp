#pragma once

#include <array>
#include <cstdint>

namespace hypermatch {

// SplitMix64 (Steele, Lea, Flood 2014). Used for seeding and stream derivation.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Stream i of a master seed: output i+1 of SplitMix64(master). Documented split
// scheme: all randomness of a run is a pure function of (master seed, stream id).
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t stream) {
    SplitMix64 g(master + stream * 0x9E3779B97F4A7C15ULL);
    return g.next();
}

// xoshiro256++ (Blackman, Vigna 2019), seeded via SplitMix64.
struct Rng {
    std::array<std::uint64_t, 4> s;

    explicit Rng(std::uint64_t seed) {
        SplitMix64 g(seed);
        for (auto& word : s) word = g.next();
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t next() {
        std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
        std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // Uniform over [0, bound) without modulo bias (Lemire 2019).
    std::uint64_t next_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool next_coin() { return (next() >> 63) != 0; }
};

} // namespace hypermatch
