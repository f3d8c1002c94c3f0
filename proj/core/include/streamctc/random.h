// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_RANDOM_H_
#define STREAMCTC_RANDOM_H_

#include <cstdint>
#include <random>

namespace streamctc {

// Seeded generator with a platform-independent output sequence.
//
// The engine is std::mt19937_64, whose sequence is fixed by the C++
// standard. The standard <random> distributions are implementation-defined,
// so values are derived from raw 64-bit draws here:
//   Uniform()       = (draw >> 11) * 2^-53, in [0, 1)
//   UniformInt(a,b) = a + draw % (b - a + 1)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  double Uniform() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }
  // Inclusive range; requires lo <= hi.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(Next() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace streamctc

#endif  // STREAMCTC_RANDOM_H_
