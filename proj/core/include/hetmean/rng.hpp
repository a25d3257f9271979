#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace hetmean {

/// Pseudo-random engine used throughout: 64-bit Mersenne Twister.
using Engine = std::mt19937_64;

/// SplitMix64 finaliser; a bijective 64-bit mixer.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

/**
 * @brief Derive an independent sub-seed from a master seed and a path of indices.
 *
 * Each index is folded in with SplitMix64, so (seed, {3, 7}) and (seed, {7, 3})
 * give unrelated streams. Used for per-replication and per-segment seeds so that
 * results never depend on evaluation order or thread count.
 */
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t master,
                                                  std::initializer_list<std::uint64_t> path) noexcept {
    std::uint64_t h = splitmix64(master);
    for (std::uint64_t p : path) {
        h = splitmix64(h ^ splitmix64(p + 0x632be59bd9b4e019ULL));
    }
    return h;
}

/// Engine seeded from a 64-bit seed through a seed sequence.
[[nodiscard]] inline Engine make_engine(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U)};
    return Engine(seq);
}

}  // namespace hetmean
