#pragma once

#include <cstdint>
#include <random>

namespace margulis {

// Deterministic uniform doubles: the mt19937_64 bit stream mapped to [0,1)
// by its top 53 bits.  The standard distribution objects are implementation
// defined, so they are avoided to keep identical seeds giving identical
// streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t bits() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace margulis
