#pragma once

#include <cstdint>
#include <random>

namespace coalition {

// Uniform draw on the open interval (0,1), built directly from the top 53 bits
// of mt19937_64. std::uniform_real_distribution is implementation-defined, so
// rolling our own keeps seeded runs bit-identical across toolchains. The
// half-offset grid means a draw can never equal 0 or 1 exactly, which the
// position-sampling edge cases rely on.
inline double uniform01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Inclusive on both ends.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(uniform01(rng) * static_cast<double>(hi - lo + 1));
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t count) {
    return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(count));
}

// splitmix64 — used to derive independent sub-seeds from one master seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    return mix_seed(base ^ mix_seed(tag));
}

}  // namespace coalition
