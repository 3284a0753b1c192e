#pragma once

#include <cmath>
#include <cstdint>

namespace siet {

/// Counter-addressable pseudo-random stream (SplitMix64 core).
///
/// Every stream is fully determined by its 64-bit key, so a simulation can
/// derive one independent stream per trial from (seed, trial_index) and get
/// results that do not depend on execution order or thread count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t key) : state_(key) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in (0, 1].
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) via multiply-shift (bound > 0).
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// Standard normal pair via Box-Muller.
    void next_normal_pair(double& z0, double& z1) {
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double rho = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * M_PI * u2;
        z0 = rho * std::cos(ang);
        z1 = rho * std::sin(ang);
    }

private:
    std::uint64_t state_;
};

/// Mixes a seed and a counter into a stream key. One SplitMix64 scramble of
/// the counter keeps neighbouring trial indices statistically decorrelated.
inline std::uint64_t stream_key(std::uint64_t seed, std::uint64_t counter) {
    SplitMix64 g(seed ^ (counter * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
    return g.next_u64();
}

}  // namespace siet
