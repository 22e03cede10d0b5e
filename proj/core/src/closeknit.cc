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

#include "knitlab/closeknit.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <set>

#include "knitlab/sierpinski.h"

namespace knitlab {
namespace {

// Lexicographic order of the ascending position lists encoded by two masks.
bool MaskLexLess(uint32_t a, uint32_t b) {
  const uint32_t diff = a ^ b;
  if (diff == 0) return false;
  const int p = std::countr_zero(diff);
  if ((a >> p) & 1u) {
    // a continues with p; b continues with something larger, or ends.
    return (b >> p) != 0;
  }
  return (a >> p) == 0;
}

int64_t ParseInt(std::string_view text) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error("cannot parse rational '" + std::string(text) + "'");
  }
  return value;
}

void CheckNoIsolated(const LabeledGraph& graph, const VertexSubset& group) {
  for (Vertex v : group) {
    if (graph.degree(v) == 0) {
      throw Error("close-knit: vertex " + std::to_string(v) +
                  " is isolated; the model assumes no isolated vertices");
    }
  }
}

// Per-vertex minimal qualifying connected group, searched size by size.
class WitnessSearch {
 public:
  WitnessSearch(const LabeledGraph& graph, const Rational& r,
                const CloseKnitOptions& options)
      : graph_(graph), r_(r), options_(options) {}

  std::optional<VertexSubset> Find(Vertex root, int max_size) {
    std::set<std::vector<Vertex>> level = {{root}};
    for (int size = 1; size <= max_size && !level.empty(); ++size) {
      for (const auto& members : level) {
        if (Qualifies(members)) return VertexSubset(members);
      }
      if (size == max_size) break;
      std::set<std::vector<Vertex>> next;
      for (const auto& members : level) {
        for (Vertex v : members) {
          for (Vertex w : graph_.neighbors(v)) {
            if (std::binary_search(members.begin(), members.end(), w)) continue;
            std::vector<Vertex> grown = members;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), w), w);
            next.insert(std::move(grown));
          }
        }
      }
      level = std::move(next);
    }
    return std::nullopt;
  }

  int64_t examined() const { return examined_; }

 private:
  bool Qualifies(const std::vector<Vertex>& members) {
    auto it = cache_.find(members);
    if (it != cache_.end()) return it->second;
    if (++examined_ > options_.candidate_cap) {
      throw Error("close-knit: candidate cap of " +
                  std::to_string(options_.candidate_cap) +
                  " groups exceeded; lower k or raise the cap");
    }
    const bool ok = MinRatio(graph_, VertexSubset(members)).min_ratio >= r_;
    cache_.emplace(members, ok);
    return ok;
  }

  const LabeledGraph& graph_;
  Rational r_;
  CloseKnitOptions options_;
  std::map<std::vector<Vertex>, bool> cache_;
  int64_t examined_ = 0;
};

}  // namespace

std::string FormatRational(const Rational& value) {
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

Rational ParseRational(std::string_view text) {
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInt(text));
  const int64_t den = ParseInt(text.substr(slash + 1));
  if (den == 0) throw Error("rational '" + std::string(text) + "' has zero denominator");
  return Rational(ParseInt(text.substr(0, slash)), den);
}

int64_t InternalDegree(const LabeledGraph& graph, const VertexSubset& inner,
                       const VertexSubset& group) {
  group.CheckWithin(graph.order());
  if (inner.empty()) throw Error("internal degree: S' must be nonempty");
  for (Vertex v : inner) {
    if (!group.contains(v)) {
      throw Error("internal degree: vertex " + std::to_string(v) +
                  " of S' is not in S");
    }
  }
  int64_t count = 0;
  for (Vertex v : inner) {
    for (Vertex w : graph.neighbors(v)) {
      if (!group.contains(w)) continue;
      // Edges with both ends in S' are seen twice.
      if (inner.contains(w) && w < v) continue;
      ++count;
    }
  }
  return count;
}

GroupReport MinRatio(const LabeledGraph& graph, const VertexSubset& group) {
  group.CheckWithin(graph.order());
  const int k = group.size();
  if (k == 0) throw Error("min ratio: group must be nonempty");
  if (k > kMaxRatioGroupSize) {
    throw Error("min ratio: group of size " + std::to_string(k) +
                " exceeds the enumeration bound " +
                std::to_string(kMaxRatioGroupSize));
  }
  CheckNoIsolated(graph, group);

  std::vector<uint32_t> adj(k, 0);
  std::vector<int64_t> degree(k);
  for (int a = 0; a < k; ++a) {
    degree[a] = graph.degree(group[a]);
    for (Vertex w : graph.neighbors(group[a])) {
      const int b = group.RankOf(w);
      if (b >= 0) adj[a] |= 1u << b;
    }
  }

  // Gray-code walk; d(S',S) = sum_{v in S'} deg_S(v) - e(S').
  uint32_t mask = 0;
  int64_t num = 0;
  int64_t den = 0;
  uint32_t best_mask = 0;
  int64_t best_num = 1;
  int64_t best_den = 0;
  const uint64_t total = uint64_t{1} << k;
  for (uint64_t g = 1; g < total; ++g) {
    const int bit = std::countr_zero(g);
    const uint32_t flag = 1u << bit;
    const int64_t gain =
        std::popcount(adj[bit]) - std::popcount(adj[bit] & (mask & ~flag));
    if (mask & flag) {
      mask &= ~flag;
      num -= gain;
      den -= degree[bit];
    } else {
      mask |= flag;
      num += gain;
      den += degree[bit];
    }
    const __int128 lhs = static_cast<__int128>(num) * best_den;
    const __int128 rhs = static_cast<__int128>(best_num) * den;
    if (best_den == 0 || lhs < rhs || (lhs == rhs && MaskLexLess(mask, best_mask))) {
      best_mask = mask;
      best_num = num;
      best_den = den;
    }
  }

  std::vector<Vertex> argmin;
  for (int a = 0; a < k; ++a) {
    if ((best_mask >> a) & 1u) argmin.push_back(group[a]);
  }
  return GroupReport{group, Rational(best_num, best_den),
                     VertexSubset(std::move(argmin))};
}

CloseKnitResult IsRkCloseKnit(const LabeledGraph& graph, const Rational& r,
                              int k, const CloseKnitOptions& options) {
  if (k < 1 || k > kMaxRatioGroupSize) {
    throw Error("close-knit: k must lie in 1.." +
                std::to_string(kMaxRatioGroupSize));
  }
  CheckNoIsolated(graph, VertexSubset::Range(1, graph.order()));
  CloseKnitResult result;
  result.r = r;
  result.k = k;
  result.witness.resize(graph.order());
  WitnessSearch search(graph, r, options);
  for (Vertex v = 1; v <= graph.order(); ++v) {
    auto found = search.Find(v, k);
    if (!found) {
      result.failing_vertex = v;
      break;
    }
    result.witness[v - 1] = std::move(*found);
  }
  result.close_knit = !result.failing_vertex.has_value();
  result.candidates_examined = search.examined();
  return result;
}

std::optional<int> MinimalCloseKnitK(const LabeledGraph& graph,
                                     const Rational& r, int k_cap,
                                     const CloseKnitOptions& options) {
  if (k_cap < 1 || k_cap > kMaxRatioGroupSize) {
    throw Error("close-knit: k cap must lie in 1.." +
                std::to_string(kMaxRatioGroupSize));
  }
  CheckNoIsolated(graph, VertexSubset::Range(1, graph.order()));
  WitnessSearch search(graph, r, options);
  int k = 0;
  for (Vertex v = 1; v <= graph.order(); ++v) {
    auto found = search.Find(v, k_cap);
    if (!found) return std::nullopt;
    k = std::max(k, found->size());
  }
  return k;
}

std::vector<FamilyScanRow> FamilyScan(int max_level, const Rational& r,
                                      int k_cap,
                                      const CloseKnitOptions& options) {
  std::vector<FamilyScanRow> rows;
  for (int level = 1; level <= max_level; ++level) {
    const SierpinskiGraph gasket = SierpinskiGraph::Build(level);
    rows.push_back({level, MinimalCloseKnitK(gasket.graph(), r, k_cap, options)});
  }
  return rows;
}

}  // namespace knitlab
