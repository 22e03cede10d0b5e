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

#ifndef KNITLAB_RANKING_H_
#define KNITLAB_RANKING_H_

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "knitlab/graph.h"

namespace knitlab {

using BigInt = boost::multiprecision::cpp_int;

BigInt Binomial(int n, int k);
BigInt Factorial(int n);

// Bits needed to address `count` distinct values: ceil(log2 count), and 0
// when count <= 1.
int AddressBits(const BigInt& count);

// Combinatorial number system: the k-subset c_1 < ... < c_k of {1..n} has
// rank sum_t C(c_t - 1, t), a bijection onto [0, C(n,k)).
BigInt RankSubset(const VertexSubset& subset);
VertexSubset UnrankSubset(const BigInt& rank, int n, int k);

// Lehmer rank of a permutation of 0..k-1: sum_i code_i * (k-1-i)!, where
// code_i counts later entries smaller than entry i. Bijection onto [0, k!).
BigInt RankPermutation(std::span<const int> permutation);
std::vector<int> UnrankPermutation(const BigInt& rank, int k);

}  // namespace knitlab

#endif  // KNITLAB_RANKING_H_
