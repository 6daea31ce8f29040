// Copyright 2026 The dppl Authors
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

#ifndef DPPL_RNG_HPP
#define DPPL_RNG_HPP

#include <cstdint>
#include <random>
#include <span>

namespace dppl {

// Deterministic random stream. All distribution transforms are implemented
// on top of raw 64-bit draws so that a given seed reproduces the same
// sequence on every platform, independent of the standard library's
// <random> distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  // Standard normal via Box-Muller (cosine branch only).
  double normal();

  // Poisson draw by Knuth's product-of-uniforms method. Exact for the
  // moderate means used here; cost grows linearly with the mean.
  int poisson(double mean);

  // Index in [0, weights.size()) drawn proportionally to the given
  // non-negative weights. Total weight must be positive.
  int pick_weighted(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

// Stable per-item seed derivation (splitmix64 finalizer over a mixed word),
// used to give parallel work items independent streams.
std::uint64_t derive_seed(std::uint64_t global_seed, std::uint64_t item_id);

}  // namespace dppl

#endif  // DPPL_RNG_HPP
