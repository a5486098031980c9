#pragma once

#include <cmath>
#include <cstdint>

namespace miscale {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based generator keyed by (seed, stream). Independent streams are
/// derived with `derive`, so parallel consumers never share state; the same
/// (seed, stream, counter) triple always yields the same value.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(splitmix64(splitmix64(seed) ^ (0xD6E8FEB86659FD93ULL * stream))) {}

    /// Child generator on an independent stream.
    Rng derive(std::uint64_t substream) const {
        Rng child(0);
        child.key_ = splitmix64(key_ ^ (0xA5A5A5A5A5A5A5A5ULL + substream * 0x9E3779B97F4A7C15ULL));
        return child;
    }

    std::uint64_t next_u64() { return splitmix64(key_ ^ splitmix64(counter_++)); }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; consumes two uniforms per call.
    double next_gaussian() {
        // (0,1] so the log is finite
        double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Uniform integer in [0, n), unbiased via rejection.
    std::uint64_t next_below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

  private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

} // namespace miscale
