// Copyright 2026 The qemlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>

namespace qem {

/// Counter-friendly xoshiro256** generator with hand-rolled distributions.
///
/// Standard-library distributions are not bit-reproducible across
/// implementations, so everything downstream of a seed goes through this
/// class. `derive(master, stream)` gives independent, order-free child
/// streams; shot i of an experiment always uses `derive(seed, i)`.
class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t x = seed;
    for (auto& word : state_) {
      word = split_mix(x);
    }
  }

  static Rng derive(uint64_t master, uint64_t stream) {
    uint64_t x = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    x = split_mix(x);
    x ^= master;
    return Rng(split_mix(x));
  }

  uint64_t next() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Unbiased draw from [0, bound). bound must be nonzero.
  uint64_t uniform(uint64_t bound) {
    // Lemire's multiply-shift with rejection on the biased strip.
    uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    uint64_t lo = static_cast<uint64_t>(m);
    if (lo < bound) {
      const uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1).
  double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bit() { return (next() >> 63) != 0; }

  /// Top k bits of one draw, k in [0, 64].
  uint64_t bits(unsigned k) {
    if (k == 0) return 0;
    return next() >> (64 - k);
  }

  bool bernoulli(double p) { return uniform_real() < p; }

  double normal(double mean, double sd) {
    // Box-Muller; draws exactly two uniforms per call.
    const double u1 = 1.0 - uniform_real();
    const double u2 = uniform_real();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * r * std::cos(6.283185307179586476925287 * u2);
  }

 private:
  static constexpr uint64_t rotl(uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  static uint64_t split_mix(uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t state_[4];
};

}  // namespace qem
