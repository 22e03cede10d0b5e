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

#include "knitlab/mdl_codec.h"

#include <algorithm>

#include <boost/math/constants/constants.hpp>
#include <zlib.h>

namespace knitlab {
namespace {

void CheckSide(const SideInfo& side, const LabeledGraph& pattern) {
  if (side.k != pattern.order()) {
    throw Error("alt codec: side k=" + std::to_string(side.k) + " but " +
                side.generator.ToString() + " has " +
                std::to_string(pattern.order()) + " vertices");
  }
  if (side.k > side.n) throw Error("alt codec: pattern larger than host");
}

// Positions 1..C(n,2) not inside `occupied`, ascending.
template <typename Fn>
void ForEachPair(int n, const VertexSubset& occupied, Fn&& fn) {
  int64_t pos = 0;
  for (Vertex i = 1; i <= n; ++i) {
    const bool in_i = occupied.contains(i);
    for (Vertex j = i + 1; j <= n; ++j) {
      ++pos;
      fn(pos, in_i && occupied.contains(j));
    }
  }
}

class BitWriter {
 public:
  void Put(bool bit) {
    if (used_ == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<uint8_t>(0x80u >> used_);
    used_ = (used_ + 1) % 8;
  }
  void PutNumber(const BigInt& value, int width) {
    for (int b = width - 1; b >= 0; --b) Put(boost::multiprecision::bit_test(value, b));
  }
  std::vector<uint8_t>& bytes() { return bytes_; }

 private:
  std::vector<uint8_t> bytes_;
  int used_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}
  bool Get() {
    if (cursor_ >= bytes_.size() * 8) throw Error("alt codec: truncated bit stream");
    const bool bit = (bytes_[cursor_ / 8] >> (7 - cursor_ % 8)) & 1u;
    ++cursor_;
    return bit;
  }
  BigInt GetNumber(int width) {
    BigInt value = 0;
    for (int b = 0; b < width; ++b) value = (value << 1) | (Get() ? 1 : 0);
    return value;
  }
  size_t cursor() const { return cursor_; }
  size_t capacity() const { return bytes_.size() * 8; }

 private:
  std::span<const uint8_t> bytes_;
  size_t cursor_ = 0;
};

void PutU32(std::vector<uint8_t>& out, uint32_t value) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<uint8_t>(value >> shift));
  }
}

uint32_t GetU32(std::span<const uint8_t> bytes, size_t& offset) {
  if (offset + 4 > bytes.size()) throw Error("alt codec: truncated header");
  uint32_t value = 0;
  for (int i = 0; i < 4; ++i) value = (value << 8) | bytes[offset++];
  return value;
}

}  // namespace

int AltEncoding::SubsetBits() const {
  return AddressBits(Binomial(side.n, side.k));
}

int AltEncoding::PermutationBits() const {
  return side.ordered ? AddressBits(Factorial(side.k)) : 0;
}

int64_t AltEncoding::Length() const {
  return static_cast<int64_t>(residual.size()) + SubsetBits() + PermutationBits();
}

int64_t AltLengthFormula(int n, int k, bool ordered) {
  return (PairCount(n) - PairCount(k)) + AddressBits(Binomial(n, k)) +
         (ordered ? AddressBits(Factorial(k)) : 0);
}

int64_t Gain(int n, int k, bool ordered) {
  if (k < 2) throw Error("gain: pattern size must be >= 2");
  if (n < k) throw Error("gain: host size must be >= pattern size");
  return PairCount(k) - AddressBits(Binomial(n, k)) -
         (ordered ? AddressBits(Factorial(k)) : 0);
}

std::optional<int64_t> ThresholdExact(int k, bool ordered) {
  if (Gain(k, k, ordered) <= 0) return std::nullopt;
  int64_t lo = k;  // gain > 0
  int64_t hi = k;
  while (Gain(static_cast<int>(hi), k, ordered) > 0) {
    lo = hi;
    hi *= 2;
    if (hi > (int64_t{1} << 30)) throw Error("threshold: search exceeded 2^30");
  }
  while (hi - lo > 1) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (Gain(static_cast<int>(mid), k, ordered) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

AltEncoding EncodeAlt(const EdgeBitString& bits,
                      std::span<const Vertex> embedding, const SideInfo& side) {
  if (bits.order() != side.n) {
    throw Error("alt codec: bit string is for n=" + std::to_string(bits.order()) +
                " but side n=" + std::to_string(side.n));
  }
  const LabeledGraph pattern = side.generator.Generate();
  CheckSide(side, pattern);
  if (static_cast<int>(embedding.size()) != side.k) {
    throw Error("alt codec: occurrence has " + std::to_string(embedding.size()) +
                " vertices, expected " + std::to_string(side.k));
  }
  const VertexSubset occupied =
      VertexSubset::FromUnsorted({embedding.begin(), embedding.end()});
  occupied.CheckWithin(side.n);

  std::vector<int> placement(side.k);
  for (int t = 0; t < side.k; ++t) placement[t] = occupied.RankOf(embedding[t]);
  const bool identity = std::is_sorted(embedding.begin(), embedding.end());
  if (!side.ordered && !identity) {
    throw Error("alt codec: unordered encoding requires an ordered occurrence");
  }

  for (int a = 0; a < side.k; ++a) {
    for (int b = a + 1; b < side.k; ++b) {
      const bool host =
          bits.at(PairPosition(side.n, embedding[a], embedding[b]));
      if (host != pattern.HasEdge(a + 1, b + 1)) {
        throw Error("alt codec: vertices " + FormatSubset(occupied) +
                    " do not carry an induced copy of " +
                    side.generator.ToString() + " (pattern pair {" +
                    std::to_string(a + 1) + "," + std::to_string(b + 1) +
                    "} mismatches)");
      }
    }
  }

  AltEncoding alt;
  alt.side = side;
  alt.subset_rank = RankSubset(occupied);
  alt.perm_rank = side.ordered ? RankPermutation(placement) : BigInt(0);
  alt.residual.reserve(static_cast<size_t>(PairCount(side.n) - PairCount(side.k)));
  ForEachPair(side.n, occupied, [&](int64_t pos, bool inside) {
    if (!inside) alt.residual.push_back(bits.at(pos));
  });
  return alt;
}

AltEncoding EncodeAlt(const EdgeBitString& bits, const VertexSubset& occurrence,
                      const SideInfo& side) {
  return EncodeAlt(bits, std::span<const Vertex>(occurrence.members()), side);
}

EdgeBitString DecodeAlt(const AltEncoding& alt) {
  const SideInfo& side = alt.side;
  const LabeledGraph pattern = side.generator.Generate();
  CheckSide(side, pattern);
  if (alt.subset_rank < 0 || alt.subset_rank >= Binomial(side.n, side.k)) {
    throw Error("alt codec: subset rank outside [0, C(n,k))");
  }
  if (alt.perm_rank < 0 || alt.perm_rank >= Factorial(side.k) ||
      (!side.ordered && alt.perm_rank != 0)) {
    throw Error("alt codec: permutation rank outside [0, k!)");
  }
  const int64_t residual_length = PairCount(side.n) - PairCount(side.k);
  if (static_cast<int64_t>(alt.residual.size()) != residual_length) {
    throw Error("alt codec: residual has " + std::to_string(alt.residual.size()) +
                " bits, expected " + std::to_string(residual_length));
  }

  const VertexSubset occupied = UnrankSubset(alt.subset_rank, side.n, side.k);
  std::vector<int> placement =
      side.ordered ? UnrankPermutation(alt.perm_rank, side.k)
                   : UnrankPermutation(0, side.k);
  // pattern_at[i]: pattern vertex (0-based) placed on occupied[i].
  std::vector<int> pattern_at(side.k);
  for (int t = 0; t < side.k; ++t) pattern_at[placement[t]] = t;

  std::vector<bool> bits(static_cast<size_t>(PairCount(side.n)));
  size_t next = 0;
  for (Vertex i = 1; i <= side.n; ++i) {
    const int ri = occupied.RankOf(i);
    for (Vertex j = i + 1; j <= side.n; ++j) {
      const int rj = ri < 0 ? -1 : occupied.RankOf(j);
      const int64_t pos = PairPosition(side.n, i, j);
      if (rj >= 0) {
        bits[pos - 1] = pattern.HasEdge(pattern_at[ri] + 1, pattern_at[rj] + 1);
      } else {
        bits[pos - 1] = alt.residual[next++];
      }
    }
  }
  return EdgeBitString(side.n, std::move(bits));
}

LengthReport MeasureLength(const AltEncoding& alt) {
  LengthReport report;
  report.canonical = PairCount(alt.side.n);
  report.alternative = alt.Length();
  report.gain = report.canonical - report.alternative;
  return report;
}

std::vector<uint8_t> SerializeAlt(const AltEncoding& alt) {
  std::vector<uint8_t> out;
  PutU32(out, static_cast<uint32_t>(alt.side.n));
  PutU32(out, static_cast<uint32_t>(alt.side.k));
  const std::string id = alt.side.generator.ToString();
  PutU32(out, static_cast<uint32_t>(id.size()));
  out.insert(out.end(), id.begin(), id.end());
  out.push_back(alt.side.ordered ? 1 : 0);

  BitWriter writer;
  writer.PutNumber(alt.subset_rank, alt.SubsetBits());
  if (alt.side.ordered) writer.PutNumber(alt.perm_rank, alt.PermutationBits());
  for (bool bit : alt.residual) writer.Put(bit);
  out.insert(out.end(), writer.bytes().begin(), writer.bytes().end());
  return out;
}

AltEncoding DeserializeAlt(std::span<const uint8_t> bytes) {
  size_t offset = 0;
  AltEncoding alt;
  alt.side.n = static_cast<int>(GetU32(bytes, offset));
  alt.side.k = static_cast<int>(GetU32(bytes, offset));
  const uint32_t id_length = GetU32(bytes, offset);
  if (offset + id_length + 1 > bytes.size()) {
    throw Error("alt codec: truncated header");
  }
  alt.side.generator = GeneratorId::Parse(std::string(
      reinterpret_cast<const char*>(bytes.data() + offset), id_length));
  offset += id_length;
  const uint8_t ordered = bytes[offset++];
  if (ordered > 1) throw Error("alt codec: ordered flag must be 0 or 1");
  alt.side.ordered = ordered == 1;
  if (alt.side.k > alt.side.n || alt.side.n < 0) {
    throw Error("alt codec: header has k > n");
  }

  const int64_t residual_length = PairCount(alt.side.n) - PairCount(alt.side.k);
  const int64_t payload_bits =
      alt.SubsetBits() + alt.PermutationBits() + residual_length;
  const std::span<const uint8_t> payload = bytes.subspan(offset);
  if (static_cast<int64_t>(payload.size()) != (payload_bits + 7) / 8) {
    throw Error("alt codec: expected " + std::to_string((payload_bits + 7) / 8) +
                " payload bytes, got " + std::to_string(payload.size()));
  }
  BitReader reader(payload);
  alt.subset_rank = reader.GetNumber(alt.SubsetBits());
  alt.perm_rank = alt.side.ordered ? reader.GetNumber(alt.PermutationBits()) : 0;
  alt.residual.resize(static_cast<size_t>(residual_length));
  for (int64_t i = 0; i < residual_length; ++i) alt.residual[i] = reader.Get();
  while (reader.cursor() < reader.capacity()) {
    if (reader.Get()) throw Error("alt codec: non-zero padding");
  }
  return alt;
}

SizeBounds ComputeSizeBounds(int k) {
  if (k < 2) throw Error("bounds: pattern size must be >= 2");
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const BigFloat two = 2;
  const BigFloat kk = k;
  SizeBounds out;
  out.ordered = pow(two, (kk - 1) / 2);
  out.deficient = pow(two, kk * (kk - 1) / (2 * (kk + 1)));
  out.unordered = kk * pow(two, kk / 2) /
                  (boost::math::constants::e<BigFloat>() * sqrt(two));
  return out;
}

int64_t CompressorProxyBits(const EdgeBitString& bits) {
  std::vector<uint8_t> packed((bits.bits().size() + 7) / 8, 0);
  for (size_t i = 0; i < bits.bits().size(); ++i) {
    if (bits.bits()[i]) packed[i / 8] |= static_cast<uint8_t>(0x80u >> (i % 8));
  }
  uLongf capacity = compressBound(static_cast<uLong>(packed.size()));
  std::vector<Bytef> out(capacity);
  const int status = compress2(out.data(), &capacity, packed.data(),
                               static_cast<uLong>(packed.size()), 9);
  if (status != Z_OK) throw Error("compressor proxy: zlib failure");
  return static_cast<int64_t>(capacity) * 8;
}

}  // namespace knitlab
