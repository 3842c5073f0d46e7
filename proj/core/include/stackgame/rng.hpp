#pragma once

#include <cmath>
#include <cstdint>

namespace stackgame {

// SplitMix64. Small, fast, and fully specified, so every artifact the library
// writes is reproducible bit for bit across platforms and thread counts.
// std::mt19937 would fix the engine but not the distributions, which the
// standard leaves implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    /// Inclusive integer range.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Standard normal via Box-Muller (cosine branch only, two draws per call).
    double normal() {
        double u1 = 1.0 - u01();  // (0, 1], keeps the log finite
        double u2 = u01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    std::uint64_t state_;
};

/// Hierarchical stream split: one root seed, stable per-module / per-sample
/// sub-streams, so parallel and serial runs produce identical bytes.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t index = 0) {
    Rng mixer(root ^ (stream * 0x9e3779b97f4a7c15ULL) ^ (index + 0x632be59bd9b4e019ULL));
    mixer.next();
    return mixer.next();
}

}  // namespace stackgame
