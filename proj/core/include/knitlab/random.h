// Copyright 2026 The knitlab Authors.
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

#ifndef KNITLAB_RANDOM_H_
#define KNITLAB_RANDOM_H_

#include <cstdint>
#include <random>

namespace knitlab {

using Rng = std::mt19937_64;

// SplitMix64 finaliser.
inline uint64_t MixBits(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for cell `index` of a run keyed by `master`. Independent of how cells
// are scheduled across workers.
inline uint64_t DeriveSeed(uint64_t master, uint64_t index) {
  return MixBits(MixBits(master) ^ MixBits(index + 0x632be59bd9b4e019ULL));
}

inline uint64_t DeriveSeed(uint64_t master, uint64_t a, uint64_t b) {
  return DeriveSeed(DeriveSeed(master, a), b);
}

// Uniform double in [0, 1) from one 64-bit draw.
inline double UnitDraw(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; bound > 0.
inline uint64_t BoundedDraw(Rng& rng, uint64_t bound) {
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace knitlab

#endif  // KNITLAB_RANDOM_H_
