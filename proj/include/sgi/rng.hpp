#ifndef SGI_RNG_HPP
#define SGI_RNG_HPP

#include <cstdint>

namespace sgi {

// splitmix64. Hand-rolled so that streams are identical across standard
// libraries and platforms; std::uniform_int_distribution is not portable
// bit-for-bit.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }
};

/// Derives an independent stream from (seed, salt); used to give every
/// oracle branch its own deterministic sub-seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    Rng r(seed ^ (0xA24BAED4963EE407ULL + salt * 0x9E3779B97F4A7C15ULL));
    return r.next();
}

}  // namespace sgi

#endif
