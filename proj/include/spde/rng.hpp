#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace spde::rng {

// 64-bit avalanche finalizer (splitmix64 / Stafford mix13).
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Counter-based stream: output n is mix64(state0 + (n+1)*kGolden), period 2^64
// (splitmix64). The generator choice is pinned; reproducibility claims depend
// on it. All floating-point draws are built from these 64-bit words only, so
// streams are identical across platforms and thread counts.
class Stream {
public:
    explicit constexpr Stream(std::uint64_t state0) noexcept : state_(state0) {}

    std::uint64_t next() noexcept {
        state_ += kGolden;
        return mix64(state_);
    }

    // Uniform on [0,1), 53-bit resolution.
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0,1); safe to pass to log().
    double open01() noexcept {
        return (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52;
    }

    // Standard normal via Box-Muller, cosine branch. Consumes exactly two words.
    double normal() noexcept {
        const double u = open01();
        const double v = uniform01();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    // Exponential with the given rate. Consumes one word.
    double exponential(double rate) noexcept {
        return -std::log(open01()) / rate;
    }

private:
    std::uint64_t state_;
};

// Seeding contract: the stream for path i under a given master seed starts from
// mix64(master_seed XOR (i+1)*kGolden). Fixed; outputs are part of the
// reproducibility surface.
inline Stream path_stream(std::uint64_t master_seed, std::uint64_t path_index) noexcept {
    return Stream(mix64(master_seed ^ ((path_index + 1) * kGolden)));
}

// Derives an independent master seed for a tagged sub-ensemble (e.g. the
// Brownian reference vs. each epsilon run). Distinct multiplier so sub-seed
// derivation never aliases the path derivation above.
inline std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t tag) noexcept {
    return mix64(master_seed ^ ((tag + 1) * 0xD1B54A32D192ED03ULL));
}

} // namespace spde::rng
