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

#ifndef KNITLAB_MDL_CODEC_H_
#define KNITLAB_MDL_CODEC_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "knitlab/graph.h"
#include "knitlab/patterns.h"
#include "knitlab/ranking.h"

namespace knitlab {

using BigFloat = boost::multiprecision::cpp_bin_float_50;

// Side information the decoder is conditioned on; not counted in lengths.
struct SideInfo {
  int n = 0;
  int k = 0;
  GeneratorId generator;
  // Whether the decoder needs the placement permutation.
  bool ordered = true;

  friend bool operator==(const SideInfo&, const SideInfo&) = default;
};

// Two-part description of a graph containing an induced copy of a
// generated pattern: where the copy sits, how it is ordered, and every bit
// of E(G) outside the copy.
struct AltEncoding {
  SideInfo side;
  BigInt subset_rank;  // combinadic rank of the occupied vertex set
  BigInt perm_rank;    // Lehmer rank of the placement; 0 when unordered
  // Bits of E(G) at pairs not inside the occupied set, ascending position.
  std::vector<bool> residual;

  int SubsetBits() const;
  int PermutationBits() const;
  // Measured length in bits of the three fields.
  int64_t Length() const;

  friend bool operator==(const AltEncoding&, const AltEncoding&) = default;
};

struct LengthReport {
  int64_t canonical = 0;    // C(n,2)
  int64_t alternative = 0;  // measured L(E')
  int64_t gain = 0;         // canonical - alternative
};

// (C(n,2) - C(k,2)) + ceil(log2 C(n,k)) + [ordered] ceil(log2 k!).
int64_t AltLengthFormula(int n, int k, bool ordered);

// C(k,2) - ceil(log2 C(n,k)) - [ordered] ceil(log2 k!). Requires 2 <= k <= n.
int64_t Gain(int n, int k, bool ordered);

// Largest n >= k with Gain(n, k, ordered) > 0; nullopt if even n = k fails.
// Gain is non-increasing in n, so the boundary is found by doubling and
// bisection.
std::optional<int64_t> ThresholdExact(int k, bool ordered);

// `embedding[t]` is the host vertex playing pattern vertex t+1. The
// embedding must be an induced isomorphism from the generated pattern; in
// unordered mode it must also be increasing (an ordered occurrence), since
// the decoder then regenerates the pattern from its size alone.
AltEncoding EncodeAlt(const EdgeBitString& bits,
                      std::span<const Vertex> embedding, const SideInfo& side);
// Ordered occurrence: pattern vertex t+1 sits at occurrence[t].
AltEncoding EncodeAlt(const EdgeBitString& bits, const VertexSubset& occurrence,
                      const SideInfo& side);

EdgeBitString DecodeAlt(const AltEncoding& alt);

LengthReport MeasureLength(const AltEncoding& alt);

// Byte layout, all integers big-endian:
//   u32 n | u32 k | u32 len | len bytes generator id | u8 ordered
//   then a bit stream, most significant bit first:
//   subset_rank (SubsetBits) | perm_rank (PermutationBits, ordered only) |
//   residual bits
//   zero-padded to a whole byte.
std::vector<uint8_t> SerializeAlt(const AltEncoding& alt);
AltEncoding DeserializeAlt(std::span<const uint8_t> bytes);

struct SizeBounds {
  BigFloat ordered;     // 2^{(k-1)/2}
  BigFloat deficient;   // 2^{k(k-1)/(2(k+1))}, deficiency log n
  BigFloat unordered;   // k 2^{k/2} / (e sqrt 2), leading term only
};

SizeBounds ComputeSizeBounds(int k);

// Bits of the zlib (level 9) stream of the packed bit string. An upper
// bound on description length only; informational.
int64_t CompressorProxyBits(const EdgeBitString& bits);

}  // namespace knitlab

#endif  // KNITLAB_MDL_CODEC_H_
