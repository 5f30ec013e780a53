#pragma once

// Deterministic seeded randomness. All randomized checks take an explicit
// seed and draw through this wrapper only, so outputs are reproducible
// byte-for-byte across runs.

#include <cstdint>
#include <random>

#include "kql/rational.hpp"

namespace kql {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() { return state_(); }

  long intIn(long lo, long hi) {  // inclusive bounds
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  double unit() {  // [-1, 1)
    return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
  }

  Rat smallRational(long maxAbs = 3, long maxDen = 2) {
    Rat r(intIn(-maxAbs, maxAbs), intIn(1, maxDen));
    r.canonicalize();
    return r;
  }

  Cx unitComplex() { return Cx(unit(), unit()); }

 private:
  std::mt19937_64 state_;
};

template <class S>
S scalarFromInt(long c);

template <>
inline Rat scalarFromInt<Rat>(long c) {
  return Rat(c);
}
template <>
inline Cx scalarFromInt<Cx>(long c) {
  return Cx(static_cast<double>(c), 0.0);
}

}  // namespace kql
