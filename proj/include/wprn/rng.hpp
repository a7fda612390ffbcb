#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wprn {

// Deterministic draws on top of mt19937_64. The standard distributions are
// not bit-stable across library implementations, so the few mappings we need
// are spelled out here.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unit-mean exponential, strictly positive.
    double exponential() {
        double x = 0.0;
        do {
            x = -std::log1p(-uniform());
        } while (!(x > 0.0));
        return x;
    }

    std::uint64_t next_u64() { return engine_(); }

    // Integer in [0, n).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace wprn
