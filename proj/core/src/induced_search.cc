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

#include "knitlab/induced_search.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace knitlab {
namespace {

class Matcher {
 public:
  Matcher(const LabeledGraph& graph, const LabeledGraph& pattern)
      : host_(graph), pattern_(pattern), k_(pattern.order()) {
    if (k_ > kMaxPatternOrder) {
      throw Error("induced search: pattern has " + std::to_string(k_) +
                  " vertices, limit is " + std::to_string(kMaxPatternOrder));
    }
    ChooseOrder();
    matched_.assign(k_, -1);
    candidates_.assign(static_cast<size_t>(k_) * host_.words(), 0);
  }

  // Calls visit(matched) for each embedding; stops when visit returns false.
  template <typename Visit>
  void Run(Visit&& visit) {
    if (k_ > host_.order()) return;
    stop_ = false;
    Extend(0, visit);
  }

  // Host vertex (0-based) matched to pattern vertex t.
  const std::vector<int>& matched() const { return matched_; }

 private:
  void ChooseOrder() {
    std::vector<char> placed(k_, 0);
    for (int step = 0; step < k_; ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < k_; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : order_) links += pattern_.adjacent(u, v);
        if (links > best_links ||
            (links == best_links && pattern_.degree(v) > pattern_.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
    }
  }

  template <typename Visit>
  void Extend(int depth, Visit& visit) {
    if (stop_) return;
    if (depth == k_) {
      if (!visit(matched_)) stop_ = true;
      return;
    }
    const int words = host_.words();
    const int n = host_.order();
    const int target = order_[depth];
    uint64_t* cand = &candidates_[static_cast<size_t>(depth) * words];
    for (int w = 0; w < words; ++w) cand[w] = ~uint64_t{0};
    if (n % 64) cand[words - 1] = (uint64_t{1} << (n % 64)) - 1;
    for (int d = 0; d < depth; ++d) {
      const int prior = order_[d];
      const int image = matched_[prior];
      const uint64_t* row = host_.row(image);
      if (pattern_.adjacent(target, prior)) {
        for (int w = 0; w < words; ++w) cand[w] &= row[w];
      } else {
        for (int w = 0; w < words; ++w) cand[w] &= ~row[w];
      }
      cand[image >> 6] &= ~(uint64_t{1} << (image & 63));
    }
    const int need = pattern_.degree(target);
    for (int w = 0; w < words && !stop_; ++w) {
      uint64_t bits = cand[w];
      while (bits && !stop_) {
        const int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (host_.degree(v) < need) continue;
        matched_[target] = v;
        Extend(depth + 1, visit);
      }
    }
    matched_[target] = -1;
  }

  DenseGraph host_;
  DenseGraph pattern_;
  int k_;
  std::vector<int> order_;
  std::vector<int> matched_;
  std::vector<uint64_t> candidates_;
  bool stop_ = false;
};

std::set<std::vector<Vertex>> CollectSets(const LabeledGraph& graph,
                                          const LabeledGraph& pattern) {
  std::set<std::vector<Vertex>> sets;
  Matcher matcher(graph, pattern);
  matcher.Run([&](const std::vector<int>& matched) {
    std::vector<Vertex> members(matched.size());
    for (size_t t = 0; t < matched.size(); ++t) members[t] = matched[t] + 1;
    std::sort(members.begin(), members.end());
    sets.insert(std::move(members));
    return true;
  });
  return sets;
}

}  // namespace

DenseGraph::DenseGraph(const LabeledGraph& graph)
    : n_(graph.order()),
      words_(std::max(1, (graph.order() + 63) / 64)),
      bits_(static_cast<size_t>(words_) * std::max(graph.order(), 1), 0),
      degree_(graph.order(), 0) {
  for (const Edge& e : graph.edges()) {
    const int u = e.u - 1;
    const int v = e.v - 1;
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
    ++degree_[u];
    ++degree_[v];
  }
}

std::vector<VertexSubset> FindInducedOccurrences(const LabeledGraph& graph,
                                                 const LabeledGraph& pattern,
                                                 size_t limit) {
  std::vector<VertexSubset> out;
  if (pattern.order() == 0) return out;
  for (const auto& members : CollectSets(graph, pattern)) {
    if (out.size() >= limit) break;
    out.emplace_back(members);
  }
  return out;
}

int64_t CountInducedOccurrences(const LabeledGraph& graph,
                                const LabeledGraph& pattern) {
  if (pattern.order() == 0) return 0;
  return static_cast<int64_t>(CollectSets(graph, pattern).size());
}

bool ContainsInduced(const LabeledGraph& graph, const LabeledGraph& pattern) {
  if (pattern.order() == 0) return true;
  bool found = false;
  Matcher matcher(graph, pattern);
  matcher.Run([&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

double ExpectedSearchNodes(int n, int k) {
  double total = 0.0;
  for (int d = 1; d <= k; ++d) {
    total += std::exp2(d * std::log2(static_cast<double>(std::max(n, 1))) -
                       d * (d - 1) / 2.0);
  }
  return total;
}

}  // namespace knitlab
