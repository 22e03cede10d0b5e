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

#include "knitlab/experiments.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "knitlab/induced_search.h"
#include "knitlab/mdl_codec.h"
#include "knitlab/random.h"
#include "knitlab/ranking.h"
#include "knitlab/sierpinski.h"

namespace knitlab {
namespace {

int64_t CountAutomorphisms(const DenseGraph& g, std::vector<int>& image,
                           std::vector<char>& used, int depth) {
  const int k = g.order();
  if (depth == k) return 1;
  int64_t total = 0;
  for (int v = 0; v < k; ++v) {
    if (used[v] || g.degree(v) != g.degree(depth)) continue;
    bool ok = true;
    for (int u = 0; u < depth && ok; ++u) {
      ok = g.adjacent(depth, u) == g.adjacent(v, image[u]);
    }
    if (!ok) continue;
    used[v] = 1;
    image[depth] = v;
    total += CountAutomorphisms(g, image, used, depth + 1);
    used[v] = 0;
  }
  return total;
}

// Runs body(i) for i in [0, count) over `jobs` threads.
template <typename Body>
void ParallelFor(int count, int jobs, Body&& body) {
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < count;) body(i);
  };
  const int threads = std::max(1, std::min(jobs, count));
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

std::string FormatDouble(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

VertexSubset InitFor(const SierpinskiGraph& gasket, InitMode mode) {
  switch (mode) {
    case InitMode::kTopTriangle:
      return gasket.Subgaskets(1).front();
    case InitMode::kAll:
      return VertexSubset::Range(1, gasket.graph().order());
    case InitMode::kNone:
      return VertexSubset();
  }
  return VertexSubset();
}

}  // namespace

int64_t AutomorphismCount(const LabeledGraph& pattern) {
  if (pattern.order() > kMaxAutomorphismOrder) {
    throw Error("automorphisms: pattern has " + std::to_string(pattern.order()) +
                " vertices, brute force is limited to " +
                std::to_string(kMaxAutomorphismOrder));
  }
  const DenseGraph g(pattern);
  std::vector<int> image(pattern.order(), -1);
  std::vector<char> used(pattern.order(), 0);
  return CountAutomorphisms(g, image, used, 0);
}

MomentReport ExpectedOccurrences(int n, const LabeledGraph& pattern) {
  const int k = pattern.order();
  MomentReport report;
  report.aut_count = AutomorphismCount(pattern);
  const BigInt subsets = Binomial(n, k);
  const BigInt denominator = BigInt(1) << static_cast<unsigned>(PairCount(k));
  report.expected_labelled = BigRational(subsets, denominator);
  report.expected_isomorphic =
      BigRational(subsets * Factorial(k) / report.aut_count, denominator);
  return report;
}

LabeledGraph PlantOccurrence(const LabeledGraph& graph,
                             const LabeledGraph& pattern,
                             const VertexSubset& subset) {
  if (subset.size() != pattern.order()) {
    throw Error("plant: subset has " + std::to_string(subset.size()) +
                " vertices but pattern has " + std::to_string(pattern.order()));
  }
  subset.CheckWithin(graph.order());
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (!(subset.contains(e.u) && subset.contains(e.v))) edges.push_back(e);
  }
  for (const Edge& e : pattern.edges()) {
    edges.push_back({subset[e.u - 1], subset[e.v - 1]});
  }
  return LabeledGraph(graph.order(), std::move(edges));
}

LabeledGraph SamplePatternFree(int n, double p, const LabeledGraph& pattern,
                               uint64_t seed, int max_attempts) {
  for (int i = 0; i < max_attempts; ++i) {
    LabeledGraph g = SampleGnp(n, p, DeriveSeed(seed, static_cast<uint64_t>(i)));
    if (!ContainsInduced(g, pattern)) return g;
  }
  throw Error("pattern-free sampling: no sample without an induced copy in " +
              std::to_string(max_attempts) + " attempts");
}

ContainmentReport ContainmentExperiment(int n, const LabeledGraph& pattern,
                                        int trials, uint64_t seed, int jobs,
                                        double p) {
  if (trials < 1) throw Error("containment: trials must be >= 1");
  ContainmentReport report;
  report.trials = trials;
  report.counts.assign(trials, 0);
  ParallelFor(trials, jobs, [&](int i) {
    const LabeledGraph g = SampleGnp(n, p, DeriveSeed(seed, static_cast<uint64_t>(i)));
    report.counts[i] = CountInducedOccurrences(g, pattern);
  });
  double sum = 0.0;
  int hits = 0;
  for (int64_t c : report.counts) {
    sum += static_cast<double>(c);
    hits += c > 0;
  }
  report.mean = sum / trials;
  double squares = 0.0;
  for (int64_t c : report.counts) {
    squares += (c - report.mean) * (c - report.mean);
  }
  report.variance = trials > 1 ? squares / (trials - 1) : 0.0;
  report.frequency = static_cast<double>(hits) / trials;
  return report;
}

std::vector<SweepRow> ThresholdSweep(const std::vector<int>& levels, int n_min,
                                     int n_max, const SweepOptions& options) {
  std::vector<SweepRow> rows;
  for (int level : levels) {
    const LabeledGraph pattern = SierpinskiGraph::Build(level).graph();
    const int k = pattern.order();
    const SizeBounds bounds = ComputeSizeBounds(k);
    for (int n = n_min; n <= n_max; ++n) {
      SweepRow row;
      row.level = level;
      row.k = k;
      row.n = n;
      row.ordered_bound = bounds.ordered.convert_to<double>();
      row.deficient_bound = bounds.deficient.convert_to<double>();
      if (n < k) {
        row.containment_frequency = 0.0;
        rows.push_back(row);
        continue;
      }
      row.gain_ordered = Gain(n, k, true);
      row.gain_unordered = Gain(n, k, false);
      if (options.trials * ExpectedSearchNodes(n, k) <= options.node_budget) {
        const auto report =
            ContainmentExperiment(n, pattern, options.trials,
                                  DeriveSeed(options.seed, level, n), options.jobs);
        row.containment_frequency = report.frequency;
        row.samples = options.trials;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string SweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "level,k,n,gain_ordered,gain_unordered,ordered_bound,deficient_bound,"
         "containment_frequency,samples\n";
  for (const SweepRow& row : rows) {
    out << row.level << ',' << row.k << ',' << row.n << ','
        << (row.gain_ordered ? std::to_string(*row.gain_ordered) : "") << ','
        << (row.gain_unordered ? std::to_string(*row.gain_unordered) : "") << ','
        << FormatDouble(row.ordered_bound) << ','
        << FormatDouble(row.deficient_bound) << ','
        << (row.containment_frequency ? FormatDouble(*row.containment_frequency)
                                      : "")
        << ',' << row.samples << '\n';
  }
  return out.str();
}

std::vector<LinkRow> CloseKnitDiffusionLink(const std::vector<int>& levels,
                                            const CoordinationGame& game,
                                            const DiffusionConfig& base,
                                            const LinkOptions& options) {
  const Rational threshold = RiskThreshold(game);
  std::vector<LinkRow> rows;
  for (int level : levels) {
    const SierpinskiGraph gasket = SierpinskiGraph::Build(level);
    LinkRow row;
    row.level = level;
    row.threshold = threshold;
    row.min_k = MinimalCloseKnitK(gasket.graph(), threshold, options.k_cap);

    DiffusionConfig config = base;
    config.init_adopters = InitFor(gasket, options.init);
    config.horizon = options.horizon_per_vertex * gasket.graph().order();
    config.seed = DeriveSeed(base.seed, static_cast<uint64_t>(level));
    const HittingStats stats = HittingTimeStats(gasket.graph(), game, config,
                                                options.trials, options.jobs);
    row.median_hitting = stats.median;
    row.success_rate = stats.success_rate;
    rows.push_back(row);
  }
  return rows;
}

std::string LinkCsv(const std::vector<LinkRow>& rows) {
  std::ostringstream out;
  out << "level,threshold,min_k,median_hitting,success_rate\n";
  for (const LinkRow& row : rows) {
    out << row.level << ',' << FormatRational(row.threshold) << ','
        << (row.min_k ? std::to_string(*row.min_k) : "") << ','
        << (row.median_hitting ? FormatDouble(*row.median_hitting) : "") << ','
        << FormatDouble(row.success_rate) << '\n';
  }
  return out.str();
}

}  // namespace knitlab
