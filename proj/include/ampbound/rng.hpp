#pragma once

#include <cmath>
#include <cstdint>

namespace ampbound {

// Counter-based generator built on the SplitMix64 output function. Draw i is
// a pure function of (seed, i), so parallel fills reproduce the serial
// sequence exactly and sub-streams can be split without coordination.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t bits(std::uint64_t i) const {
        std::uint64_t z = seed_ + (i + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0,1), 53-bit resolution.
    double uniform(std::uint64_t i) const {
        return static_cast<double>(bits(i) >> 11) * 0x1.0p-53;
    }

    // Uniform on (0,1); safe as a log/Box-Muller argument.
    double uniform_open(std::uint64_t i) const {
        return (static_cast<double>(bits(i) >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal draw indexed by i (Box-Muller on counters 2i, 2i+1).
    double normal(std::uint64_t i) const {
        const double u1 = uniform_open(2 * i);
        const double u2 = uniform(2 * i + 1);
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(6.283185307179586476925286766559 * u2);
    }

    // Independent sub-stream derived from a tag.
    CounterRng stream(std::uint64_t tag) const {
        std::uint64_t z = seed_ ^ (0xD1342543DE82EF95ULL * (tag + 0x632BE59BD9B4E019ULL));
        z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDULL;
        z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ULL;
        return CounterRng(z ^ (z >> 33));
    }

  private:
    std::uint64_t seed_;
};

}  // namespace ampbound
