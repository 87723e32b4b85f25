#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qrc {

// splitmix64 finalizer; used both to mix seed material and to decorrelate
// nearby stream ids before they seed the main generator.
inline std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e9b5ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Combines seed components into one stream seed. Absorbing each component
// through splitmix64 keeps streams independent even when components differ
// in a single low bit (e.g. consecutive trial indices).
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t state = 0x6a09e667f3bcc909ULL;
    for (std::uint64_t part : parts) {
        state ^= part;
        state = splitmix64(state);
    }
    return splitmix64(state);
}

// Deterministic random stream. The raw mt19937_64 sequence is pinned by the
// C++ standard; the bounded/real draws below avoid std::*_distribution, whose
// outputs vary across standard library implementations.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) {
        std::uint64_t s = seed;
        engine_.seed(splitmix64(s));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next_u64();
            if (x >= threshold)
                return x % bound;
        }
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace qrc
