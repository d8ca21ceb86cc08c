#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <vector>

namespace moeadde {

/// Mixes a 64-bit state one step forward and returns the mixed output
/// (splitmix64). Also used on its own to derive independent run seeds.
inline std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// One-shot splitmix64 mix of a value, for seed derivation chains.
inline std::uint64_t mix64(std::uint64_t value) noexcept {
    std::uint64_t s = value;
    return splitmix64_next(s);
}

/// Deterministic random source: xoshiro256++ 1.0 seeded via splitmix64.
///
/// The generator algorithm is pinned so that equal seeds reproduce equal
/// draw sequences on every platform. All derived draws (uniform doubles,
/// unbiased integers, shuffles) are implemented here from raw 64-bit
/// outputs; the standard library distributions are deliberately not used
/// because their output is implementation-defined.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) noexcept : seed_(seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64_next(s);
    }

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform01();
    }

    /// Unbiased uniform integer in [0, n); n must be > 0.
    /// Lemire's multiply-with-rejection method.
    std::uint64_t uniform_below(std::uint64_t n) noexcept {
        unsigned __int128 m =
            static_cast<unsigned __int128>(next_u64()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0ULL - n) % n;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    std::size_t uniform_index(std::size_t n) noexcept {
        return static_cast<std::size_t>(uniform_below(n));
    }

    /// Fisher-Yates shuffle with the pinned integer draw.
    template <typename T>
    void shuffle(std::vector<T>& values) noexcept {
        for (std::size_t i = values.size(); i > 1; --i) {
            using std::swap;
            swap(values[i - 1], values[uniform_index(i)]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
};

/// Anything the variation operators need from a random source. Production
/// code passes RandomSource; tests may pass a scripted stand-in to pin
/// individual draws.
template <typename R>
concept UniformSource = requires(R& r, std::uint64_t n) {
    { r.uniform01() } -> std::convertible_to<double>;
    { r.uniform_below(n) } -> std::convertible_to<std::uint64_t>;
};

}  // namespace moeadde
