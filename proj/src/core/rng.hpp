#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace banmf {

// All randomness in the library flows through std::mt19937_64 (its output
// sequence is fixed by the standard, so results are portable) plus the
// helpers below. The seed-derivation scheme is part of the reproducibility
// contract: changing any constant here changes every generated dataset.

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used only to mix seeds,
// never as the sampling engine.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic sub-seed for a path of indices under a base seed, e.g.
// derive_seed(base, {cell, trial}). Collision-free in practice and stable
// across platforms.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = splitmix64(base);
    for (std::uint64_t v : path) {
        s = splitmix64(s ^ v);
    }
    return s;
}

// Uniform draw from the half-open interval (0, 1]. The open end at zero
// matters: multiplicative updates lock zero entries forever, so factor
// initialization must never produce an exact 0.
inline double uniform_open01(std::mt19937_64& eng) {
    return static_cast<double>((eng() >> 11) + 1) * 0x1.0p-53;
}

// Bernoulli(p) draw for p in [0, 1). Exact at p = 0.
inline bool bernoulli(std::mt19937_64& eng, double p) {
    return uniform_open01(eng) <= p;
}

}  // namespace banmf
