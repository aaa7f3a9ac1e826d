#pragma once

#include <cstdint>
#include <random>

namespace pggnet {

/// Seedable 64-bit Mersenne Twister (std::mt19937_64) with hand-rolled
/// distributions. The engine's output sequence is fixed by the C++ standard;
/// the standard distributions are not, so every draw used by the simulator
/// goes through the members below. Given the same seed, every platform
/// produces the same stream.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
  std::uint64_t uniform_index(std::uint64_t bound) {
    if (bound == 0) return 0;
    unsigned __int128 product =
        static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// True with probability p (p <= 0 never, p >= 1 always).
  bool bernoulli(double p) {
    // Always consume one draw so the stream position does not depend on p.
    const double u = uniform01();
    return u < p;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  // UniformRandomBitGenerator surface, for std::shuffle in tests.
  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pggnet
