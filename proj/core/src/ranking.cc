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

#include "knitlab/ranking.h"

#include <algorithm>

namespace knitlab {

BigInt Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt Factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

int AddressBits(const BigInt& count) {
  if (count <= 1) return 0;
  return static_cast<int>(boost::multiprecision::msb(BigInt(count - 1))) + 1;
}

BigInt RankSubset(const VertexSubset& subset) {
  BigInt rank = 0;
  for (int t = 1; t <= subset.size(); ++t) {
    rank += Binomial(subset[t - 1] - 1, t);
  }
  return rank;
}

VertexSubset UnrankSubset(const BigInt& rank, int n, int k) {
  if (k < 0 || k > n) throw Error("unrank subset: k outside 0..n");
  if (rank < 0 || rank >= Binomial(n, k)) {
    throw Error("unrank subset: rank outside [0, C(" + std::to_string(n) +
                "," + std::to_string(k) + "))");
  }
  std::vector<Vertex> members(k);
  BigInt remaining = rank;
  int c = n;  // c_t - 1 ranges over t-1 .. c_{t+1} - 2
  for (int t = k; t >= 1; --t) {
    // Largest m = c_t - 1 with C(m, t) <= remaining.
    int m = c - 1;
    BigInt value = Binomial(m, t);
    while (value > remaining) {
      // C(m-1, t) = C(m, t) * (m - t) / m
      value = value * (m - t) / m;
      --m;
    }
    members[t - 1] = m + 1;
    remaining -= value;
    c = m;
  }
  return VertexSubset(std::move(members));
}

BigInt RankPermutation(std::span<const int> permutation) {
  const int k = static_cast<int>(permutation.size());
  std::vector<char> seen(k, 0);
  for (int value : permutation) {
    if (value < 0 || value >= k || seen[value]) {
      throw Error("rank permutation: not a permutation of 0.." +
                  std::to_string(k - 1));
    }
    seen[value] = 1;
  }
  BigInt rank = 0;
  for (int i = 0; i < k; ++i) {
    int code = 0;
    for (int j = i + 1; j < k; ++j) code += permutation[j] < permutation[i];
    rank = rank * (k - i) + code;
  }
  return rank;
}

std::vector<int> UnrankPermutation(const BigInt& rank, int k) {
  if (rank < 0 || rank >= Factorial(k)) {
    throw Error("unrank permutation: rank outside [0, " + std::to_string(k) +
                "!)");
  }
  // Mixed-radix digits, least significant last.
  std::vector<int> code(k, 0);
  BigInt remaining = rank;
  for (int i = k - 1; i >= 0; --i) {
    const int radix = k - i;
    code[i] = static_cast<int>(remaining % radix);
    remaining /= radix;
  }
  std::vector<int> pool(k);
  for (int i = 0; i < k; ++i) pool[i] = i;
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) {
    out[i] = pool[code[i]];
    pool.erase(pool.begin() + code[i]);
  }
  return out;
}

}  // namespace knitlab
