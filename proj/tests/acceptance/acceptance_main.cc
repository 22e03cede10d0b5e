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

// Acceptance harness: runs every criterion at its stated tolerance and
// runtime limit and prints one PASS/FAIL line per criterion.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "knitlab/closeknit.h"
#include "knitlab/diffusion.h"
#include "knitlab/experiments.h"
#include "knitlab/graph.h"
#include "knitlab/induced_search.h"
#include "knitlab/mdl_codec.h"
#include "knitlab/patterns.h"
#include "knitlab/random.h"
#include "knitlab/ramsey.h"
#include "knitlab/sierpinski.h"

namespace {

using namespace knitlab;

// Collects failed checks for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  void Note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
  const std::string& notes() const { return notes_; }
  bool ok() const { return count_ == 0; }
  std::string Summary() const {
    std::string out;
    for (const auto& f : failures_) out += "\n    - " + f;
    if (count_ > static_cast<int>(failures_.size())) {
      out += "\n    - ... " + std::to_string(count_ - failures_.size()) + " more";
    }
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::string notes_;
  int count_ = 0;
};

std::string Str(int64_t v) { return std::to_string(v); }

CoordinationGame Game(int a, int b, int c, int d) {
  return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

LabeledGraph RandomConnected(int n, uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= n; ++v) {
    edges.push_back({1 + static_cast<Vertex>(BoundedDraw(rng, v - 1)), v});
  }
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (UnitDraw(rng) < 0.3 &&
          std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end()) {
        edges.push_back({u, v});
      }
    }
  }
  return LabeledGraph(n, edges);
}

// Plants S_level along a random embedding of a G(n,1/2) sample.
LabeledGraph PlantRandom(int n, int level, uint64_t seed, std::vector<int>* embedding,
                         bool sorted = false) {
  const LabeledGraph pattern = SierpinskiGraph::Build(level).graph();
  Rng rng(seed);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  embedding->assign(all.begin(), all.begin() + pattern.order());
  if (sorted) std::sort(embedding->begin(), embedding->end());
  const LabeledGraph base = SampleGnp(n, 0.5, DeriveSeed(seed, 1));
  std::vector<bool> inside(n + 1, false);
  for (int v : *embedding) inside[v] = true;
  std::vector<Edge> edges;
  for (const Edge& e : base.edges()) {
    if (!(inside[e.u] && inside[e.v])) edges.push_back(e);
  }
  for (const Edge& e : pattern.edges()) {
    const int a = (*embedding)[e.u - 1];
    const int b = (*embedding)[e.v - 1];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return LabeledGraph(n, edges);
}

void Structure(Check& c) {
  for (int l = 1; l <= 7; ++l) {
    const SierpinskiGraph s = SierpinskiGraph::Build(l);
    const int64_t n = 3 * (static_cast<int64_t>(std::pow(3, l - 1)) + 1) / 2;
    const int64_t m = static_cast<int64_t>(std::pow(3, l));
    c.Expect(s.graph().order() == n, "S_" + Str(l) + " vertices " + Str(s.graph().order()));
    c.Expect(s.graph().size() == m, "S_" + Str(l) + " edges " + Str(s.graph().size()));
    std::map<int, int64_t> hist;
    for (Vertex v = 1; v <= s.graph().order(); ++v) ++hist[s.graph().degree(v)];
    const std::map<int, int64_t> want =
        l == 1 ? std::map<int, int64_t>{{2, 3}} : std::map<int, int64_t>{{2, 3}, {4, n - 3}};
    c.Expect(hist == want, "S_" + Str(l) + " degree multiset");
  }
  c.Expect(SierpinskiGraph::Build(7).graph().order() == 1095, "n_7 = 1095");
  c.Expect(SierpinskiGraph::Build(7).graph().size() == 2187, "m_7 = 2187");
}

void Roundtrips(Check& c) {
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 64;
    const LabeledGraph g = SampleGnp(n, 0.5, DeriveSeed(1001, t));
    c.Expect(Decode(Encode(g)) == g, "canonical roundtrip trial " + Str(t));
  }
  for (int t = 0; t < 200; ++t) {
    const int level = 1 + t % 2;
    const int k = level == 1 ? 3 : 6;
    const int n = k + t % (65 - k);
    const bool ordered = t % 4 != 3;
    std::vector<int> embedding;
    const LabeledGraph g =
        PlantRandom(n, level, DeriveSeed(1002, t), &embedding, !ordered);
    const SideInfo side{n, k, GeneratorId{"sierpinski", level}, ordered};
    const AltEncoding alt = EncodeAlt(Encode(g), embedding, side);
    const AltEncoding back = DeserializeAlt(SerializeAlt(alt));
    c.Expect(back == alt, "alt serialization trial " + Str(t));
    c.Expect(Decode(DecodeAlt(back)) == g, "alt roundtrip trial " + Str(t));
    c.Expect(MeasureLength(alt).alternative == AltLengthFormula(n, k, ordered),
             "alt length formula trial " + Str(t));
  }
}

void Threshold(Check& c) {
  c.Expect(ThresholdExact(6, true) == 7, "threshold_exact(6) = 7");
  c.Expect(Gain(7, 6, true) == 2, "gain(7,6) = +2, got " + Str(Gain(7, 6, true)));
  c.Expect(Gain(16, 6, true) == -8, "gain(16,6) = -8, got " + Str(Gain(16, 6, true)));
  for (int n = 6; n <= 7; ++n) {
    for (int t = 0; t < 50; ++t) {
      std::vector<int> embedding;
      const LabeledGraph g = PlantRandom(n, 2, DeriveSeed(1003, n, t), &embedding);
      const AltEncoding alt =
          EncodeAlt(Encode(g), embedding, SideInfo{n, 6, GeneratorId{"sierpinski", 2}, true});
      c.Expect(MeasureLength(alt).gain > 0, "planted n=" + Str(n) + " compressible");
      c.Expect(Decode(DecodeAlt(alt)) == g, "planted n=" + Str(n) + " roundtrip");
    }
  }
}

void CloseKnitSuite(Check& c) {
  c.Expect(MinRatio(LabeledGraph::Complete(3), VertexSubset::Range(1, 3)).min_ratio ==
               Rational(1, 2),
           "min_ratio(K3, V) = 1/2");
  const SierpinskiGraph s3 = SierpinskiGraph::Build(3);
  int interior = 0;
  for (const auto& tri : s3.Subgaskets(1)) {
    bool all_four = true;
    for (Vertex v : tri) all_four &= s3.graph().degree(v) == 4;
    if (!all_four) continue;
    ++interior;
    c.Expect(MinRatio(s3.graph(), tri).min_ratio == Rational(1, 4),
             "interior triangle " + FormatSubset(tri));
  }
  c.Expect(interior == 6, "S_3 has 6 interior triangles");
  for (int l = 1; l <= 4; ++l) {
    const LabeledGraph g = SierpinskiGraph::Build(l).graph();
    const CloseKnitResult r = IsRkCloseKnit(g, Rational(1, 4), 3);
    c.Expect(r.close_knit, "S_" + Str(l) + " (1/4,3)-close-knit");
    for (Vertex v = 1; r.close_knit && v <= g.order(); ++v) {
      const VertexSubset& w = r.witness[v - 1];
      c.Expect(w.contains(v) && w.size() <= 3 &&
                   MinRatio(g, w).min_ratio >= Rational(1, 4),
               "S_" + Str(l) + " witness for " + Str(v));
    }
  }
  for (int t = 0; t < 100; ++t) {
    const LabeledGraph g = RandomConnected(2 + t % 13, DeriveSeed(1004, t));
    c.Expect(MinRatio(g, VertexSubset::Range(1, g.order())).min_ratio == Rational(1, 2),
             "random connected graph " + Str(t));
  }
}

void RamseySuite(Check& c) {
  const LabeledGraph k3 = LabeledGraph::Complete(3);
  const HostCertificate six = IsHost(LabeledGraph::Complete(6), k3);
  c.Expect(six.verified && six.colorings_checked == 32768, "K6 host over 32768 colourings");

  const LabeledGraph k5 = LabeledGraph::Complete(5);
  const HostCertificate five = IsHost(k5, k3);
  c.Expect(!five.verified && five.witness.has_value(), "K5 not a host");
  if (five.witness) {
    // Validate the witness against every triangle of K5.
    bool mono = false;
    for (Vertex a = 1; a <= 5; ++a) {
      for (Vertex b = a + 1; b <= 5; ++b) {
        for (Vertex d = b + 1; d <= 5; ++d) {
          const Color x = five.witness->of(k5.EdgeIndex(a, b));
          mono |= x == five.witness->of(k5.EdgeIndex(a, d)) &&
                  x == five.witness->of(k5.EdgeIndex(b, d));
        }
      }
    }
    c.Expect(!mono, "K5 witness has no monochromatic triangle");
    std::vector<Edge> red;
    std::vector<Edge> blue;
    for (int64_t i = 0; i < k5.size(); ++i) {
      (five.witness->of(i) == Color::kRed ? red : blue).push_back(k5.edges()[i]);
    }
    c.Expect(CountInducedOccurrences(LabeledGraph(5, red), CycleGraph(5)) == 1 &&
                 CountInducedOccurrences(LabeledGraph(5, blue), CycleGraph(5)) == 1,
             "K5 witness is two complementary 5-cycles");
  }
  std::vector<LabeledGraph> hosts;
  for (int n = 2; n <= 8; ++n) hosts.push_back(LabeledGraph::Complete(std::min(n, 7)));
  hosts.pop_back();
  const OracleResult r = InducedRamseyOracle(k3, hosts);
  c.Expect(r.found && hosts[*r.found].order() == 6, "oracle over K2..K7 returns 6");
}

void SplitSuite(Check& c) {
  const LabeledGraph k3 = LabeledGraph::Complete(3);
  const LabeledGraph k6 = LabeledGraph::Complete(6);
  int instance = 0;
  int64_t max_edges = 0;
  for (uint64_t attempt = 0; instance < 50; ++attempt) {
    const int n1 = 3 + static_cast<int>(attempt % 10);
    const LabeledGraph g1 = SamplePatternFree(n1, 0.35, k3, DeriveSeed(1006, attempt));
    bool small = true;
    for (const auto& comp : ConnectedComponents(g1).components) {
      small &= InducedSubgraph(g1, comp).size() <= 24;
    }
    if (!small) continue;
    ++instance;
    max_edges = std::max<int64_t>(max_edges, g1.size());
    const UnionConstruction u = ConstructUnion(g1, k6);
    const SplitResult fast = SplitUnion(u.graph, k3, SplitMode::kFast);
    const SplitResult slow = SplitUnion(u.graph, k3, SplitMode::kProofFaithful);
    const VertexSubset want1 = VertexSubset::Range(1, n1);
    const VertexSubset want2 = VertexSubset::Range(n1 + 1, n1 + 6);
    c.Expect(fast.g1_vertices == want1 && fast.g2_vertices == want2,
             "fast split instance " + Str(instance));
    c.Expect(slow.g1_vertices == want1 && slow.g2_vertices == want2,
             "proof-faithful split instance " + Str(instance));
  }
  c.Note(Str(instance) + " instances, largest G1 has " + Str(max_edges) + " edges");
}

void MaxLevel(Check& c) {
  c.Expect(MaxConsistentSierpinskiLevel(3) == 3, "max level at c_d = 3 is 3");
  for (int cd = 1; cd <= 10; ++cd) {
    const int l = MaxConsistentSierpinskiLevel(cd);
    c.Expect(l >= 1, "max level defined at c_d = " + Str(cd));
  }
}

void Moments(Check& c) {
  const ContainmentReport k3 = ContainmentExperiment(10, LabeledGraph::Complete(3), 2000, 1008);
  c.Note("K3 mean " + std::to_string(k3.mean));
  c.Expect(std::abs(k3.mean - 15.0) <= 0.05 * 15.0,
           "K3 mean " + std::to_string(k3.mean) + " vs 15");
  const LabeledGraph s2 = SierpinskiGraph::Build(2).graph();
  const MomentReport m = ExpectedOccurrences(12, s2);
  const double expected = m.expected_isomorphic.convert_to<double>();
  c.Expect(std::abs(expected - 3.3838) < 1e-4, "S_2 first moment 3.3838");
  const ContainmentReport sr = ContainmentExperiment(12, s2, 1000, 1009);
  c.Note("S_2 mean " + std::to_string(sr.mean) + " vs " + std::to_string(expected));
  c.Expect(std::abs(sr.mean - expected) <= 0.10 * expected,
           "S_2 mean " + std::to_string(sr.mean) + " vs " + std::to_string(expected));
}

void DiffusionSuite(Check& c) {
  const CoordinationGame game = Game(2, 1, 0, 0);
  c.Expect(RiskThreshold(game) == Rational(1, 3), "threshold 1/3");
  DiffusionConfig rr;
  rr.schedule = Schedule::kRoundRobin;
  rr.init_adopters = VertexSubset({1, 2, 3});
  rr.horizon = 6;
  const Trace sweep = Run(SierpinskiGraph::Build(2).graph(), game, rr);
  c.Expect(sweep.hit_all.has_value() && *sweep.hit_all <= 6, "S_2 all-A within one sweep");
  for (int l = 2; l <= 4; ++l) {
    const SierpinskiGraph s = SierpinskiGraph::Build(l);
    DiffusionConfig config;
    config.epsilon = 0.02;
    config.init_adopters = s.Subgaskets(1).front();
    config.horizon = 200 * static_cast<int64_t>(s.graph().order());
    config.seed = DeriveSeed(1010, l);
    const HittingStats stats = HittingTimeStats(s.graph(), game, config, 100);
    c.Note("S_" + Str(l) + " success " + std::to_string(stats.success_rate) + " median " +
           (stats.median ? std::to_string(*stats.median) : "none"));
    c.Expect(stats.success_rate >= 0.9,
             "S_" + Str(l) + " success rate " + std::to_string(stats.success_rate));
  }
}

struct Output {
  int code = -1;
  std::string text;
};

Output Shell(const std::string& command) {
  Output out;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return out;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.text.append(buffer, got);
  const int status = pclose(pipe);
  out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Drops the "metadata" member, the only place a timestamp may appear.
std::string WithoutMetadata(const std::string& manifest) {
  const size_t at = manifest.find("\"metadata\"");
  if (at == std::string::npos) return manifest;
  const size_t end = manifest.find('}', at);
  return manifest.substr(0, at) + manifest.substr(end + 1);
}

void Determinism(Check& c) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("knitlab_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::string> commands = {
      "--seed 7 --trials 60 experiment containment --n 10 --pattern K3",
      "--seed 7 --trials 40 diffuse stats --graph S3 --epsilon 0.02 --init 1,2,3",
      "--seed 7 --trials 20 experiment sweep --levels 1,2 --n-min 3 --n-max 10",
      "--seed 7 --trials 20 experiment link --levels 2,3",
      "ramsey host-check --host K5 --pattern K3",
      "--seed 7 gen gnp --n 30 --p 0.3",
      "closeknit scan --max-level 3 --r 1/3",
      "--mode proof-faithful ramsey split --graph K6 --pattern K3",
  };
  int index = 0;
  for (const auto& args : commands) {
    std::string reference_out;
    std::string reference_manifest;
    for (int jobs : {1, 1, 3}) {
      const fs::path out = dir / ("out" + std::to_string(index));
      const fs::path manifest = dir / ("manifest" + std::to_string(index));
      fs::remove(out);
      fs::remove(manifest);
      const Output r = Shell(std::string(KNITLAB_CLI_PATH) + " --jobs " + std::to_string(jobs) +
                             " " + args + " --out " + out.string() + " --manifest " +
                             manifest.string());
      c.Expect(r.code == 0, "'" + args + "' exit " + Str(r.code) + ": " + r.text);
      const std::string body = Slurp(out);
      const std::string meta = WithoutMetadata(Slurp(manifest));
      if (reference_out.empty()) {
        reference_out = body;
        reference_manifest = meta;
        c.Expect(!body.empty(), "'" + args + "' produced output");
      } else {
        c.Expect(body == reference_out, "'" + args + "' output differs at jobs=" + Str(jobs));
        c.Expect(meta == reference_manifest, "'" + args + "' manifest differs");
      }
    }
    ++index;
  }
  fs::remove_all(dir);
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "sierpinski structure", 1, Structure},
      {2, "codec roundtrips", 10, Roundtrips},
      {3, "two-part code threshold", 1, Threshold},
      {4, "close-knit suite", 30, CloseKnitSuite},
      {5, "ramsey suite", 60, RamseySuite},
      {6, "union split agreement", 300, SplitSuite},
      {7, "sierpinski level bound", 1, MaxLevel},
      {8, "first-moment checks", 300, Moments},
      {9, "diffusion", 300, DiffusionSuite},
      {10, "cli determinism", 300, Determinism},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.Expect(seconds < criterion.limit_seconds,
                 "runtime " + std::to_string(seconds) + " s over the limit");
    if (!check.ok()) ++failed;
    char line[160];
    std::snprintf(line, sizeof line, "%s criterion %2d: %-26s %8.3f s (limit %g s)",
                  check.ok() ? "PASS" : "FAIL", criterion.id, criterion.name.c_str(),
                  seconds, criterion.limit_seconds);
    std::cout << line << check.Summary() << std::endl;
    if (!check.notes().empty()) std::cout << "    " << check.notes() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : Str(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
