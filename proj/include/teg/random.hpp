#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace teg {

/// SplitMix64 finaliser.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of ensemble member `run`: splitmix64(seed + splitmix64(run)).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t run) noexcept
{
    return splitmix64(seed + splitmix64(run));
}

/// Portable random source. std::mt19937_64 has a standard-mandated output
/// sequence; the conversions below avoid the implementation-defined standard
/// distributions, so a seed gives the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform_open()
    {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Unbiased rejection sampling.
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t threshold = (0 - n) % n;
        while (true) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % n;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace teg
