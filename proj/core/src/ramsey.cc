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

#include "knitlab/ramsey.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

#include "knitlab/induced_search.h"
#include "knitlab/sierpinski.h"

namespace knitlab {
namespace {

// Induced copies of the pattern, each as the indices of its edges.
struct CopyIndex {
  int64_t copies = 0;
  int always_mono = 0;  // copies without edges
  std::vector<int> copy_size;
  std::vector<std::vector<int>> copies_of_edge;
};

CopyIndex IndexCopies(const LabeledGraph& graph, const LabeledGraph& pattern) {
  CopyIndex index;
  index.copies_of_edge.resize(graph.edges().size());
  const auto occurrences = FindInducedOccurrences(graph, pattern);
  index.copies = static_cast<int64_t>(occurrences.size());
  for (const VertexSubset& s : occurrences) {
    const int id = static_cast<int>(index.copy_size.size());
    int size = 0;
    for (int a = 0; a < s.size(); ++a) {
      for (int b = a + 1; b < s.size(); ++b) {
        const int64_t e = graph.EdgeIndex(s[a], s[b]);
        if (e >= 0) {
          index.copies_of_edge[e].push_back(id);
          ++size;
        }
      }
    }
    index.copy_size.push_back(size);
    if (size == 0) ++index.always_mono;
  }
  return index;
}

// Walks colourings in the fixed chunk/Gray order and reports the first one
// whose "has a monochromatic copy" status equals `want_mono`.
class ColoringWalk {
 public:
  ColoringWalk(const CopyIndex& index, int edges)
      : index_(index), edges_(edges), prefix_(std::min(edges, 6)) {}

  uint64_t total() const { return uint64_t{1} << edges_; }

  // Global index of the first matching colouring, if any.
  std::optional<uint64_t> FindFirst(bool want_mono, int jobs) const {
    const uint64_t chunks = uint64_t{1} << prefix_;
    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> best{~uint64_t{0}};
    auto worker = [&] {
      for (;;) {
        const uint64_t chunk = next.fetch_add(1);
        if (chunk >= chunks) return;
        if (best.load() < (chunk << Suffix())) return;
        if (auto hit = ScanChunk(chunk, want_mono)) {
          uint64_t seen = best.load();
          while (*hit < seen && !best.compare_exchange_weak(seen, *hit)) {
          }
        }
      }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(chunks)));
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (best.load() == ~uint64_t{0}) return std::nullopt;
    return best.load();
  }

  // Colour of every edge for global index `position`; bit 1 is blue.
  std::vector<Color> ColorsAt(uint64_t position) const {
    const int suffix = Suffix();
    const uint64_t chunk = position >> suffix;
    const uint64_t step = position & ((uint64_t{1} << suffix) - 1);
    const uint64_t gray = step ^ (step >> 1);
    std::vector<Color> colors(edges_);
    for (int e = 0; e < suffix; ++e) {
      colors[e] = ((gray >> e) & 1u) ? Color::kBlue : Color::kRed;
    }
    for (int e = suffix; e < edges_; ++e) {
      colors[e] = ((chunk >> (e - suffix)) & 1u) ? Color::kBlue : Color::kRed;
    }
    return colors;
  }

 private:
  int Suffix() const { return edges_ - prefix_; }

  std::optional<uint64_t> ScanChunk(uint64_t chunk, bool want_mono) const {
    const int suffix = Suffix();
    std::vector<char> blue = ToFlags(ColorsAt(chunk << suffix));
    std::vector<int> red(index_.copy_size.size(), 0);
    for (size_t e = 0; e < blue.size(); ++e) {
      if (blue[e]) continue;
      for (int id : index_.copies_of_edge[e]) ++red[id];
    }
    int64_t mono = 0;
    for (size_t id = 0; id < red.size(); ++id) {
      if (red[id] == 0 || red[id] == index_.copy_size[id]) ++mono;
    }
    const uint64_t base = chunk << suffix;
    if ((mono > 0) == want_mono) return base;
    const uint64_t steps = uint64_t{1} << suffix;
    for (uint64_t g = 1; g < steps; ++g) {
      const int e = std::countr_zero(g);
      if (blue[e]) {
        blue[e] = 0;
        for (int id : index_.copies_of_edge[e]) {
          if (red[id] == 0) --mono;
          ++red[id];
          if (red[id] == index_.copy_size[id]) ++mono;
        }
      } else {
        blue[e] = 1;
        for (int id : index_.copies_of_edge[e]) {
          if (red[id] == index_.copy_size[id]) --mono;
          --red[id];
          if (red[id] == 0) ++mono;
        }
      }
      if ((mono > 0) == want_mono) return base + g;
    }
    return std::nullopt;
  }

  static std::vector<char> ToFlags(const std::vector<Color>& colors) {
    std::vector<char> flags(colors.size());
    for (size_t i = 0; i < colors.size(); ++i) flags[i] = colors[i] == Color::kBlue;
    return flags;
  }

  const CopyIndex& index_;
  int edges_;
  int prefix_;
};

void CheckEdgeBudget(const LabeledGraph& graph, std::string_view context) {
  if (graph.size() > kMaxHostEdges) {
    throw Error(std::string(context) + ": graph has " +
                std::to_string(graph.size()) + " edges; exhaustive colouring " +
                "is limited to " + std::to_string(kMaxHostEdges) + " edges");
  }
}

}  // namespace

bool HasMonoInduced(const LabeledGraph& graph, const TwoColoring& coloring,
                    const LabeledGraph& pattern) {
  coloring.CheckTotal(graph);
  for (const VertexSubset& s : FindInducedOccurrences(graph, pattern)) {
    int red = 0;
    int blue = 0;
    for (int a = 0; a < s.size(); ++a) {
      for (int b = a + 1; b < s.size(); ++b) {
        const int64_t e = graph.EdgeIndex(s[a], s[b]);
        if (e < 0) continue;
        (coloring.of(e) == Color::kRed ? red : blue)++;
      }
    }
    if (red == 0 || blue == 0) return true;
  }
  return false;
}

HostCertificate IsHost(const LabeledGraph& host, const LabeledGraph& pattern,
                       const ColoringSearchOptions& options) {
  CheckEdgeBudget(host, "host check");
  const CopyIndex index = IndexCopies(host, pattern);
  const int edges = static_cast<int>(host.size());
  ColoringWalk walk(index, edges);
  HostCertificate cert;
  cert.host = host;
  cert.pattern = pattern;
  cert.occurrences = index.copies;
  std::optional<uint64_t> failure;
  if (index.always_mono == 0) failure = walk.FindFirst(false, options.jobs);
  cert.verified = !failure.has_value();
  if (cert.verified) {
    cert.colorings_checked = walk.total();
  } else {
    cert.colorings_checked = *failure + 1;
    cert.witness = TwoColoring(walk.ColorsAt(*failure));
  }
  return cert;
}

OracleResult InducedRamseyOracle(const LabeledGraph& pattern,
                                 const std::vector<LabeledGraph>& candidates,
                                 const ColoringSearchOptions& options) {
  for (const LabeledGraph& host : candidates) CheckEdgeBudget(host, "oracle");
  OracleResult result;
  for (size_t i = 0; i < candidates.size(); ++i) {
    result.certificates.push_back(IsHost(candidates[i], pattern, options));
    if (result.certificates.back().verified) {
      result.found = i;
      break;
    }
  }
  return result;
}

UnionConstruction ConstructUnion(const LabeledGraph& pattern_free,
                                 const LabeledGraph& host) {
  return {DisjointUnion(pattern_free, host), pattern_free.order(), host.order()};
}

std::string_view SplitModeName(SplitMode mode) {
  return mode == SplitMode::kFast ? "fast" : "proof-faithful";
}

SplitMode ParseSplitMode(std::string_view text) {
  if (text == "fast") return SplitMode::kFast;
  if (text == "proof-faithful") return SplitMode::kProofFaithful;
  throw Error("split mode must be 'fast' or 'proof-faithful', got '" +
              std::string(text) + "'");
}

SplitResult SplitUnion(const LabeledGraph& graph, const LabeledGraph& pattern,
                       SplitMode mode, const ColoringSearchOptions& options) {
  const ComponentPartition partition = ConnectedComponents(graph);
  std::vector<LabeledGraph> parts;
  for (const VertexSubset& component : partition.components) {
    parts.push_back(InducedSubgraph(graph, component));
    if (mode == SplitMode::kProofFaithful && parts.back().size() > kMaxHostEdges) {
      throw Error("split: component " + FormatSubset(component) + " has " +
                  std::to_string(parts.back().size()) +
                  " edges, over the colouring budget of " +
                  std::to_string(kMaxHostEdges) + "; use --mode fast");
    }
  }

  SplitResult result;
  result.mode = mode;
  std::vector<Vertex> g1;
  std::vector<Vertex> g2;
  for (size_t c = 0; c < parts.size(); ++c) {
    bool carries = false;
    if (mode == SplitMode::kFast) {
      carries = ContainsInduced(parts[c], pattern);
    } else {
      const CopyIndex index = IndexCopies(parts[c], pattern);
      ColoringWalk walk(index, static_cast<int>(parts[c].size()));
      carries = index.always_mono > 0 ||
                walk.FindFirst(true, options.jobs).has_value();
    }
    const auto& members = partition.components[c].members();
    (carries ? g2 : g1).insert((carries ? g2 : g1).end(), members.begin(),
                               members.end());
    if (carries) result.g2_components.push_back(partition.components[c]);
  }
  result.g1_vertices = VertexSubset::FromUnsorted(std::move(g1));
  result.g2_vertices = VertexSubset::FromUnsorted(std::move(g2));
  return result;
}

BoundsReport ComputeBounds(const LabeledGraph& pattern, double c, double c_d) {
  if (!(c > 0) || !(c_d > 0)) throw Error("bounds: c and c_d must be positive");
  using boost::multiprecision::log2;
  using boost::multiprecision::pow;
  BoundsReport report;
  report.k = pattern.order();
  report.max_degree = pattern.MaxDegree();
  report.c = c;
  report.c_d = c_d;
  const BigFloat k = report.k;
  const BigFloat delta = report.max_degree;
  const BigFloat exponent =
      report.max_degree > 1 ? BigFloat(c) * delta * log2(delta) : BigFloat(0);
  report.chvatal = k * pow(BigFloat(2), exponent);
  report.luczak_rodl = pow(k, BigFloat(c_d));
  report.incompressible_lower = pow(BigFloat(2), (k - 1) / 2);
  report.incompressible_upper = report.incompressible_lower + report.luczak_rodl;
  report.union_pattern_free_order = report.incompressible_lower - 1;
  const BigFloat& n2 = report.luczak_rodl;
  report.union_deficiency =
      report.union_pattern_free_order * n2 + n2 * (n2 - 1) / 2;
  return report;
}

int MaxConsistentSierpinskiLevel(double c_d) {
  if (!(c_d > 0)) throw Error("max level: c_d must be positive");
  const bool integral = c_d == std::floor(c_d) && c_d <= 1000;
  int level = 0;
  for (int l = 1;; ++l) {
    if (l > 30) throw Error("max level: search exceeded level 30");
    const int64_t n = SierpinskiVertexCount(l);
    bool holds;
    if (integral) {
      // n^{c_d} >= 2^{(n-1)/2}  <=>  n^{2 c_d} >= 2^{n-1}
      const BigInt lhs = boost::multiprecision::pow(
          BigInt(n), static_cast<unsigned>(2 * static_cast<int64_t>(c_d)));
      holds = lhs >= (BigInt(1) << static_cast<unsigned>(n - 1));
    } else {
      holds = BigFloat(c_d) * boost::multiprecision::log2(BigFloat(n)) >=
              BigFloat(n - 1) / 2;
    }
    if (!holds) break;
    level = l;
  }
  return level;
}

}  // namespace knitlab
