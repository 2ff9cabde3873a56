#pragma once

#include <cstdint>

namespace sumset {

// splitmix64 (Steele/Lea/Flood): tiny, seedable, identical output on
// every platform. Pinned so comparison counts reproduce bit-for-bit.
class splitmix64 {
public:
    explicit splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive. Plain modulo: bias is negligible for
    // the small ranges used here and determinism is what matters.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) noexcept {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Per-trial seed derivation: base seed, problem size and trial index fold
// into one 64-bit stream seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n, std::uint64_t trial) noexcept {
    return mix64(base ^ (n * 0x9E3779B97F4A7C15ULL) ^ (trial + 0xD1B54A32D192ED03ULL));
}

} // namespace sumset
