// Copyright 2026 The qcc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace qcc {

/// Seedable, splittable random source: a std::mt19937_64 engine whose child
/// streams are keyed by SplitMix64(seed, stream id). Every stochastic routine
/// takes one of these explicitly; nothing in the library touches global RNG
/// state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Independent child stream; the same (seed, stream) always yields the
  /// same sequence regardless of how much the parent has been consumed.
  Rng split(std::uint64_t stream) const {
    return Rng(mix(seed_ ^ mix(stream + 0x9e3779b97f4a7c15ULL)));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_int(std::uint64_t n) {
    // Lemire's multiply-shift; bias is < 2^-64 * n, irrelevant here.
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// +1 or -1 with equal probability.
  int rademacher() { return (engine_() >> 63) ? 1 : -1; }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace qcc
