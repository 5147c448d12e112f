// Copyright 2026 The retroeda Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RETROEDA_RANDOM_H_
#define RETROEDA_RANDOM_H_

#include <cstdint>
#include <random>

namespace retroeda {

// mt19937_64's output sequence is fixed by the standard. The conversions
// below are ours, so draws are identical across standard libraries.
using Rng = std::mt19937_64;

constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed for stream (generation, index) of a run. Independent of scheduling.
constexpr std::uint64_t DeriveSeed(std::uint64_t run_seed,
                                   std::uint64_t generation,
                                   std::uint64_t index) {
  return SplitMix64(SplitMix64(SplitMix64(run_seed) ^ generation) ^ index);
}

// Uniform on [0, 1).
inline double UniformOpen(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on [0, 1].
inline double UniformClosed(Rng& rng) {
  return static_cast<double>(rng() >> 11) / static_cast<double>((1ULL << 53) - 1);
}

// Uniform integer on [0, n). n must be positive.
inline std::uint64_t UniformIndex(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

}  // namespace retroeda

#endif  // RETROEDA_RANDOM_H_
