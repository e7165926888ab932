#ifndef SDNLB_RNG_HPP
#define SDNLB_RNG_HPP

// Tiny splitmix64 generator. Used anywhere the simulator needs randomness so
// that runs are reproducible bit-for-bit from a single seed, independent of
// the standard library's distribution implementations.

#include <cstdint>

namespace sdnlb {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [-1, 1).
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

    // Uniform in [0, n). Multiply-shift bounding.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

  private:
    std::uint64_t state_;
};

// Stateless mix for deriving independent stream seeds (per round, per switch).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a ^ (0x9E3779B97F4A7C15ULL + (b << 6) + (b >> 2)));
    g.next();
    return g.next();
}

}  // namespace sdnlb

#endif  // SDNLB_RNG_HPP
