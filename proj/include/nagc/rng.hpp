#pragma once

#include <cstdint>
#include <random>

namespace nagc {

// Deterministic random source. std::uniform_real_distribution is
// implementation-defined, so uniforms are mapped from raw mt19937_64 bits
// directly; the same seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in (0, 1]. Strictly positive so multiplicative updates started
  // from these values never have entries locked at zero.
  double uniform_open0_closed1() {
    return 1.0 - uniform_half_open();
  }

  // Uniform in [0, 1).
  double uniform_half_open() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). Modulo bias is irrelevant here.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nagc
