// Copyright 2026 The imgame Authors
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

#include <cstdint>
#include <random>

namespace imgame {

/// The single source of randomness: a 64-bit Mersenne Twister seeded from one
/// 64-bit value. Helpers below avoid std::*_distribution, whose output is
/// implementation-defined, so streams are identical across standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Rejection sampling removes modulo bias.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound)
{
  if (bound == 0) return 0;
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

/// Uniform integer in [lo, hi].
inline std::int64_t uniform_int(Rng &rng, std::int64_t lo, std::int64_t hi)
{
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// True with probability p, using 53 random bits.
inline bool bernoulli(Rng &rng, double p)
{
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

/// Independent child seed for the i-th derived stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace imgame
