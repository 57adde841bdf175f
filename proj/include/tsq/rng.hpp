// Copyright 2026 The tsqent Authors
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

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace tsq {

/// SplitMix64 finalizer. Used to spread user seeds over the 64-bit space.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the `index`-th sample of a run seeded with `base`:
///   splitmix64(base ^ (0x9E3779B97F4A7C15 * (index + 1)))
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Seedable generator with portable distributions.
///
/// The engine is std::mt19937_64 (output fully specified by the standard);
/// uniform and normal variates are produced here rather than through
/// <random> distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller, second variate cached).
  double normal();
  /// Real and imaginary parts i.i.d. standard normal.
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tsq
