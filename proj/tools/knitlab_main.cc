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

// knitlab: command-line entry point.
//
//   knitlab gen sierpinski --level 3 --format graph6
//   knitlab ramsey host-check --host K6 --pattern K3
//   knitlab closeknit ratio --graph s3.g6 --group 7,8,11
//
// Exit codes: 0 success, 1 domain error (a module precondition failed),
// 2 usage error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knitlab/closeknit.h"
#include "knitlab/diffusion.h"
#include "knitlab/experiments.h"
#include "knitlab/graph.h"
#include "knitlab/graph_io.h"
#include "knitlab/induced_search.h"
#include "knitlab/mdl_codec.h"
#include "knitlab/patterns.h"
#include "knitlab/ramsey.h"
#include "knitlab/sierpinski.h"

namespace {

using json = nlohmann::json;
using namespace knitlab;

constexpr const char* kVersion = "0.1.0";

struct GlobalFlags {
  uint64_t seed = 1;
  std::string format = "graph6";
  std::string out;
  int trials = 100;
  std::string mode = "fast";
  int jobs = 1;
  std::string manifest;
};

// Everything a run needs to be reproduced.
struct RunManifest {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  uint64_t seed = 0;
  std::vector<std::string> outputs;
};

class Runner {
 public:
  explicit Runner(GlobalFlags& flags) : flags_(flags) {}

  GlobalFlags& flags() { return flags_; }
  RunManifest& manifest() { return manifest_; }

  void Param(const std::string& key, const std::string& value) {
    manifest_.parameters[key] = value;
  }

  // Writes to --out when given, stdout otherwise.
  void Emit(const std::string& text) {
    if (flags_.out.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    WriteFile(flags_.out, text);
    manifest_.outputs.push_back(flags_.out);
  }

  void EmitBytes(const std::vector<uint8_t>& bytes) {
    if (flags_.out.empty()) throw Error("binary output requires --out");
    std::ofstream file(flags_.out, std::ios::binary);
    if (!file) throw Error("cannot write '" + flags_.out + "'");
    file.write(reinterpret_cast<const char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
    manifest_.outputs.push_back(flags_.out);
  }

  std::string FormatGraph(const LabeledGraph& graph) const {
    if (flags_.format == "graph6") return ToGraph6(graph);
    if (flags_.format == "json") return ToJson(graph);
    if (flags_.format == "dot") return ToDot(graph);
    throw Error("unknown format '" + flags_.format + "'");
  }

  void WriteManifest() {
    if (flags_.manifest.empty()) return;
    manifest_.seed = flags_.seed;
    json params = json::object();
    for (const auto& [key, value] : manifest_.parameters) params[key] = value;
    params["format"] = flags_.format;
    params["mode"] = flags_.mode;
    params["trials"] = std::to_string(flags_.trials);
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    json doc = {
        {"subcommand", manifest_.subcommand},
        {"parameters", params},
        {"seed", manifest_.seed},
        {"versions", {{"knitlab", kVersion}}},
        {"outputs", manifest_.outputs},
        {"metadata",
         {{"timestamp_unix",
           std::chrono::duration_cast<std::chrono::seconds>(now).count()}}},
    };
    WriteFile(flags_.manifest, doc.dump(2) + "\n");
  }

  // "# key=value" header for CSV tables.
  std::string CsvHeader() const {
    std::ostringstream out;
    out << "# knitlab " << kVersion << " " << manifest_.subcommand
        << " seed=" << flags_.seed;
    for (const auto& [key, value] : manifest_.parameters) {
      out << " " << key << "=" << value;
    }
    out << " params_hash=" << std::hex << ParamsHash() << std::dec << "\n";
    return out.str();
  }

  json Metadata() const {
    json params = json::object();
    for (const auto& [key, value] : manifest_.parameters) params[key] = value;
    std::ostringstream hash;
    hash << std::hex << ParamsHash();
    return {{"command", manifest_.subcommand},
            {"seed", flags_.seed},
            {"version", kVersion},
            {"parameters", params},
            {"params_hash", hash.str()}};
  }

 private:
  static void WriteFile(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write '" + path + "'");
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
  }

  // FNV-1a over the sorted parameters and the seed.
  uint64_t ParamsHash() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](const std::string& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
      }
      h ^= 0xff;
      h *= 0x100000001b3ULL;
    };
    mix(manifest_.subcommand);
    for (const auto& [key, value] : manifest_.parameters) {
      mix(key);
      mix(value);
    }
    mix(std::to_string(flags_.seed));
    return h;
  }

  GlobalFlags& flags_;
  RunManifest manifest_;
};

// A file path, or a pattern shorthand such as K6, S2, P3, C5.
LabeledGraph LoadGraph(const std::string& arg) {
  if (std::filesystem::exists(arg)) return ReadGraphFile(arg);
  try {
    return NamedPattern(arg);
  } catch (const Error&) {
    throw Error("'" + arg + "' is neither a readable graph file nor a pattern "
                "shorthand (K<n>, S<l>, P<n>, C<n>, E<n>)");
  }
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : SplitList(text)) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error("cannot parse integer '" + item + "'");
    }
  }
  return out;
}

CoordinationGame ParseGame(const std::string& text) {
  const auto parts = SplitList(text);
  if (parts.size() != 4) {
    throw Error("game must be four payoffs a,b,c,d (A/A, B/B, A/B, B/A)");
  }
  return {ParseRational(parts[0]), ParseRational(parts[1]),
          ParseRational(parts[2]), ParseRational(parts[3])};
}

std::string ReadText(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

json SubsetJson(const VertexSubset& subset) { return subset.members(); }

std::string BigFloatText(const BigFloat& value) {
  std::ostringstream out;
  out << std::setprecision(12) << value;
  return out.str();
}

json CertificateJson(const HostCertificate& cert) {
  json doc = {{"host", ToGraph6(cert.host)},
              {"pattern", ToGraph6(cert.pattern)},
              {"verified", cert.verified},
              {"colorings_checked", cert.colorings_checked},
              {"host_edges", cert.host.size()},
              {"induced_copies", cert.occurrences}};
  if (cert.witness) {
    doc["witness"] = json::parse(ColoringToJson(cert.host, *cert.witness));
  }
  return doc;
}

using Handler = std::function<void()>;

struct Registry {
  CLI::App* app;
  Runner* runner;
  Handler* selected;

  CLI::App* Add(CLI::App* parent, const std::string& name,
                const std::string& description, const std::string& path,
                Handler handler) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->fallthrough();
    Handler* target = selected;
    Runner* r = runner;
    sub->callback([target, r, path, handler] {
      r->manifest().subcommand = path;
      *target = handler;
    });
    return sub;
  }
};

void AddGen(Registry& reg, CLI::App* root) {
  Runner& run = *reg.runner;
  CLI::App* gen = root->add_subcommand("gen", "Generate graphs");
  gen->require_subcommand(1);
  gen->fallthrough();

  static int level = 1;
  static bool coords = false;
  auto* sierpinski = reg.Add(gen, "sierpinski", "Sierpinski graph S_l",
                             "gen sierpinski", [&run] {
    run.Param("level", std::to_string(level));
    const SierpinskiGraph s = SierpinskiGraph::Build(level);
    run.Emit(coords ? s.CoordsJson() : run.FormatGraph(s.graph()));
  });
  sierpinski->add_option("--level", level, "Level l >= 1")->required();
  sierpinski->add_flag("--coords", coords, "Emit lattice coordinates as JSON");

  static int n = 0;
  static double p = 0.5;
  auto* gnp = reg.Add(gen, "gnp", "Random graph G(n,p)", "gen gnp", [&run] {
    run.Param("n", std::to_string(n));
    run.Param("p", std::to_string(p));
    run.Emit(run.FormatGraph(SampleGnp(n, p, run.flags().seed)));
  });
  gnp->add_option("--n", n, "Vertex count")->required();
  gnp->add_option("--p", p, "Edge probability");

  static std::string name;
  auto* pattern = reg.Add(gen, "pattern", "Named pattern (K6, S2, P3, C5, ...)",
                          "gen pattern", [&run] {
    run.Param("name", name);
    run.Emit(run.FormatGraph(NamedPattern(name)));
  });
  pattern->add_option("name", name)->required();

  static std::string host;
  static std::string planted;
  static std::string occ;
  static int plant_n = 0;
  auto* plant = reg.Add(gen, "plant", "Plant an ordered occurrence of a pattern",
                        "gen plant", [&run] {
    run.Param("pattern", planted);
    run.Param("occ", occ);
    LabeledGraph base;
    if (!host.empty()) {
      run.Param("graph", host);
      base = LoadGraph(host);
    } else {
      run.Param("n", std::to_string(plant_n));
      run.Param("p", std::to_string(p));
      base = SampleGnp(plant_n, p, run.flags().seed);
    }
    run.Emit(run.FormatGraph(
        PlantOccurrence(base, LoadGraph(planted), ParseSubset(occ))));
  });
  plant->add_option("--graph", host, "Host graph (file or shorthand)");
  plant->add_option("--n", plant_n, "Sample the host from G(n,p) instead");
  plant->add_option("--p", p, "Edge probability for the sampled host");
  plant->add_option("--pattern", planted, "Pattern to plant")->required();
  plant->add_option("--occ", occ, "Comma-separated target vertices")->required();
}

void AddCodec(Registry& reg, CLI::App* root) {
  Runner& run = *reg.runner;
  CLI::App* encode = root->add_subcommand("encode", "Canonical and two-part encodings");
  encode->require_subcommand(1);
  encode->fallthrough();
  CLI::App* decode = root->add_subcommand("decode", "Invert the encodings");
  decode->require_subcommand(1);
  decode->fallthrough();

  static std::string graph;
  auto* canonical = reg.Add(encode, "canonical", "E(G) as ASCII bits",
                            "encode canonical", [&run] {
    run.Param("graph", graph);
    run.Emit(Encode(LoadGraph(graph)).ToText());
  });
  canonical->add_option("--graph", graph)->required();

  static std::string bits;
  static int n = 0;
  auto* decanon = reg.Add(decode, "canonical", "Graph from E(G) bits",
                          "decode canonical", [&run] {
    run.Param("bits", bits);
    run.Param("n", std::to_string(n));
    const std::string text =
        std::filesystem::exists(bits) ? ReadText(bits) : bits;
    run.Emit(run.FormatGraph(Decode(text, n)));
  });
  decanon->add_option("--bits", bits, "Bit text or a file holding it")->required();
  decanon->add_option("--n", n, "Vertex count")->required();

  static std::string occ;
  static std::string generator;
  static bool unordered = false;
  static std::string report;
  auto* alt = reg.Add(encode, "alt", "Two-part encoding around an occurrence",
                      "encode alt", [&run] {
    run.Param("graph", graph);
    run.Param("occ", occ);
    run.Param("gen", generator);
    run.Param("unordered", unordered ? "1" : "0");
    const LabeledGraph g = LoadGraph(graph);
    const GeneratorId id = GeneratorId::Parse(generator);
    SideInfo side{g.order(), id.Generate().order(), id, !unordered};
    // The occurrence list is read in order: pattern vertex t sits at the
    // t-th listed host vertex.
    const std::vector<int> embedding = ParseIntList(occ);
    const AltEncoding encoded = EncodeAlt(Encode(g), embedding, side);
    const LengthReport lengths = MeasureLength(encoded);
    run.EmitBytes(SerializeAlt(encoded));
    json doc = {{"n", side.n},
                {"k", side.k},
                {"generator", id.ToString()},
                {"ordered", side.ordered},
                {"subset_bits", encoded.SubsetBits()},
                {"permutation_bits", encoded.PermutationBits()},
                {"residual_bits", encoded.residual.size()},
                {"canonical_length", lengths.canonical},
                {"alt_length", lengths.alternative},
                {"gain", lengths.gain}};
    std::cout << doc.dump(2) << "\n";
  });
  alt->add_option("--graph", graph)->required();
  alt->add_option("--occ", occ, "Host vertices of pattern vertices 1..k")->required();
  alt->add_option("--gen", generator, "Generator id, e.g. sierpinski:2")->required();
  alt->add_flag("--unordered", unordered, "Omit the placement permutation");

  static std::string alt_path;
  auto* dealt = reg.Add(decode, "alt", "Reconstruct a graph from a two-part file",
                        "decode alt", [&run] {
    run.Param("alt", alt_path);
    const std::string raw = ReadText(alt_path);
    const std::vector<uint8_t> bytes(raw.begin(), raw.end());
    run.Emit(run.FormatGraph(Decode(DecodeAlt(DeserializeAlt(bytes)))));
  });
  dealt->add_option("--alt", alt_path)->required();

  static int gn = 0;
  static int gk = 0;
  auto* gain = reg.Add(encode, "gain", "Bits saved by the two-part encoding",
                       "encode gain", [&run] {
    run.Param("n", std::to_string(gn));
    run.Param("k", std::to_string(gk));
    run.Param("unordered", unordered ? "1" : "0");
    json doc = {{"n", gn},
                {"k", gk},
                {"ordered", !unordered},
                {"canonical_length", PairCount(gn)},
                {"alt_length", AltLengthFormula(gn, gk, !unordered)},
                {"gain", Gain(gn, gk, !unordered)}};
    run.Emit(doc.dump(2));
  });
  gain->add_option("--n", gn)->required();
  gain->add_option("--k", gk)->required();
  gain->add_flag("--unordered", unordered);

  auto* threshold = reg.Add(encode, "threshold",
                            "Largest n where the two-part encoding is shorter",
                            "encode threshold", [&run] {
    run.Param("k", std::to_string(gk));
    const SizeBounds bounds = ComputeSizeBounds(gk);
    const auto ordered = ThresholdExact(gk, true);
    const auto plain = ThresholdExact(gk, false);
    json doc = {{"k", gk},
                {"threshold_ordered", ordered ? json(*ordered) : json(nullptr)},
                {"threshold_unordered", plain ? json(*plain) : json(nullptr)},
                {"bound_ordered", BigFloatText(bounds.ordered)},
                {"bound_deficient", BigFloatText(bounds.deficient)},
                {"bound_unordered_leading", BigFloatText(bounds.unordered)}};
    run.Emit(doc.dump(2));
  });
  threshold->add_option("--k", gk)->required();

  auto* proxy = reg.Add(encode, "proxy", "zlib length of E(G), an upper bound",
                        "encode proxy", [&run] {
    run.Param("graph", graph);
    const EdgeBitString e = Encode(LoadGraph(graph));
    json doc = {{"raw_bits", e.length()},
                {"proxy_bits", CompressorProxyBits(e)},
                {"note", "generic-compressor upper bound; informational"}};
    run.Emit(doc.dump(2));
  });
  proxy->add_option("--graph", graph)->required();
}

void AddCloseKnit(Registry& reg, CLI::App* root) {
  Runner& run = *reg.runner;
  CLI::App* ck = root->add_subcommand("closeknit", "Close-knit ratios and certificates");
  ck->require_subcommand(1);
  ck->fallthrough();

  static std::string graph;
  static std::string group;
  auto* ratio = reg.Add(ck, "ratio", "Exact minimum ratio of a group",
                        "closeknit ratio", [&run] {
    run.Param("graph", graph);
    run.Param("group", group);
    const GroupReport report = MinRatio(LoadGraph(graph), ParseSubset(group));
    json doc = {{"group", SubsetJson(report.group)},
                {"min_ratio", FormatRational(report.min_ratio)},
                {"argmin", SubsetJson(report.argmin)}};
    run.Emit(doc.dump());
  });
  ratio->add_option("--graph", graph)->required();
  ratio->add_option("--group", group, "Comma-separated labels")->required();

  static std::string r = "1/4";
  static int k = 3;
  auto* cert = reg.Add(ck, "certificate", "Search for an (r,k)-close-knit witness",
                       "closeknit certificate", [&run] {
    run.Param("graph", graph);
    run.Param("r", r);
    run.Param("k", std::to_string(k));
    const LabeledGraph g = LoadGraph(graph);
    const CloseKnitResult result = IsRkCloseKnit(g, ParseRational(r), k);
    json witness = json::object();
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (!result.witness[v - 1].empty()) {
        witness[std::to_string(v)] = SubsetJson(result.witness[v - 1]);
      }
    }
    json doc = {{"r", FormatRational(result.r)},
                {"k", result.k},
                {"close_knit", result.close_knit},
                {"candidates_examined", result.candidates_examined},
                {"witness", witness}};
    if (result.failing_vertex) doc["failing_vertex"] = *result.failing_vertex;
    run.Emit(doc.dump(2));
  });
  cert->add_option("--graph", graph)->required();
  cert->add_option("--r", r, "Threshold p/q");
  cert->add_option("--k", k, "Group size bound");

  static int max_level = 4;
  static int k_cap = 8;
  auto* scan = reg.Add(ck, "scan", "Minimal k per Sierpinski level",
                       "closeknit scan", [&run] {
    run.Param("max_level", std::to_string(max_level));
    run.Param("r", r);
    run.Param("k_cap", std::to_string(k_cap));
    std::ostringstream out;
    out << run.CsvHeader() << "level,min_k\n";
    for (const auto& row : FamilyScan(max_level, ParseRational(r), k_cap)) {
      out << row.level << ',' << (row.min_k ? std::to_string(*row.min_k) : "none")
          << '\n';
    }
    run.Emit(out.str());
  });
  scan->add_option("--max-level", max_level);
  scan->add_option("--r", r);
  scan->add_option("--k-cap", k_cap);
}

void AddRamsey(Registry& reg, CLI::App* root) {
  Runner& run = *reg.runner;
  CLI::App* ramsey = root->add_subcommand("ramsey", "Induced Ramsey tools");
  ramsey->require_subcommand(1);
  ramsey->fallthrough();

  static std::string graph;
  static std::string pattern;
  static size_t limit = 1000000;
  auto* occ = reg.Add(ramsey, "occurrences", "Vertex sets inducing the pattern",
                      "ramsey occurrences", [&run] {
    run.Param("graph", graph);
    run.Param("pattern", pattern);
    run.Param("limit", std::to_string(limit));
    json list = json::array();
    for (const auto& s : FindInducedOccurrences(LoadGraph(graph), LoadGraph(pattern), limit)) {
      list.push_back(SubsetJson(s));
    }
    run.Emit(json{{"count", list.size()}, {"occurrences", list}}.dump());
  });
  occ->add_option("--graph", graph)->required();
  occ->add_option("--pattern", pattern)->required();
  occ->add_option("--limit", limit);

  static std::string host;
  auto* check = reg.Add(ramsey, "host-check", "Exhaustive 2-colouring check",
                        "ramsey host-check", [&run] {
    run.Param("host", host);
    run.Param("pattern", pattern);
    const HostCertificate cert =
        IsHost(LoadGraph(host), LoadGraph(pattern), {run.flags().jobs});
    run.Emit(CertificateJson(cert).dump(2));
  });
  check->add_option("--host", host)->required();
  check->add_option("--pattern", pattern)->required();

  static std::string hosts;
  auto* oracle = reg.Add(ramsey, "oracle", "First verified host in a candidate list",
                         "ramsey oracle", [&run] {
    run.Param("pattern", pattern);
    run.Param("hosts", hosts);
    std::vector<LabeledGraph> candidates;
    const auto names = SplitList(hosts);
    for (const auto& name : names) candidates.push_back(LoadGraph(name));
    const OracleResult result =
        InducedRamseyOracle(LoadGraph(pattern), candidates, {run.flags().jobs});
    json checked = json::array();
    for (const auto& cert : result.certificates) checked.push_back(CertificateJson(cert));
    json doc = {{"scope", "declared candidate list only"},
                {"candidates", names},
                {"checked", checked}};
    if (result.found) {
      doc["found"] = names[*result.found];
      doc["order"] = candidates[*result.found].order();
    } else {
      doc["found"] = nullptr;
    }
    run.Emit(doc.dump(2));
    if (!result.found) throw Error("oracle: no verified host in the candidate set");
  });
  oracle->add_option("--pattern", pattern)->required();
  oracle->add_option("--hosts", hosts, "Comma-separated files or shorthands")->required();

  static std::string g1;
  static std::string g2;
  auto* uni = reg.Add(ramsey, "union", "Disjoint union G1 + G2", "ramsey union", [&run] {
    run.Param("g1", g1);
    run.Param("g2", g2);
    run.Emit(run.FormatGraph(ConstructUnion(LoadGraph(g1), LoadGraph(g2)).graph));
  });
  uni->add_option("--g1", g1, "Pattern-free part")->required();
  uni->add_option("--g2", g2, "Host part")->required();

  auto* split = reg.Add(ramsey, "split", "Recover G1/G2 from a union",
                        "ramsey split", [&run] {
    run.Param("graph", graph);
    run.Param("pattern", pattern);
    const SplitResult result = SplitUnion(LoadGraph(graph), LoadGraph(pattern),
                                          ParseSplitMode(run.flags().mode),
                                          {run.flags().jobs});
    json comps = json::array();
    for (const auto& c : result.g2_components) comps.push_back(SubsetJson(c));
    json doc = {{"mode", SplitModeName(result.mode)},
                {"g1", SubsetJson(result.g1_vertices)},
                {"g2", SubsetJson(result.g2_vertices)},
                {"g2_components", comps}};
    run.Emit(doc.dump(2));
  });
  split->add_option("--graph", graph)->required();
  split->add_option("--pattern", pattern)->required();

  static double c = 1.0;
  static double cd = 3.0;
  auto* bounds = reg.Add(ramsey, "bounds", "Parameterised bound calculators",
                         "ramsey bounds", [&run] {
    run.Param("pattern", pattern);
    run.Param("c", std::to_string(c));
    run.Param("c_d", std::to_string(cd));
    const BoundsReport r = ComputeBounds(LoadGraph(pattern), c, cd);
    json doc = {{"k", r.k},
                {"max_degree", r.max_degree},
                {"c", r.c},
                {"c_d", r.c_d},
                {"chvatal", BigFloatText(r.chvatal)},
                {"luczak_rodl", BigFloatText(r.luczak_rodl)},
                {"incompressible_lower", BigFloatText(r.incompressible_lower)},
                {"incompressible_upper", BigFloatText(r.incompressible_upper)},
                {"union_pattern_free_order", BigFloatText(r.union_pattern_free_order)},
                {"union_deficiency", BigFloatText(r.union_deficiency)},
                {"note", "c and c_d are user parameters, not known constants"}};
    run.Emit(doc.dump(2));
  });
  bounds->add_option("--pattern", pattern)->required();
  bounds->add_option("--c", c);
  bounds->add_option("--cd", cd);

  auto* level = reg.Add(ramsey, "max-level",
                        "Largest l with n_l^c_d >= 2^((n_l-1)/2)",
                        "ramsey max-level", [&run] {
    run.Param("c_d", std::to_string(cd));
    run.Emit(json{{"c_d", cd}, {"max_level", MaxConsistentSierpinskiLevel(cd)}}.dump());
  });
  level->add_option("--cd", cd)->required();
}

void AddDiffuse(Registry& reg, CLI::App* root) {
  Runner& run = *reg.runner;
  CLI::App* diffuse = root->add_subcommand("diffuse", "Best-response diffusion");
  diffuse->require_subcommand(1);
  diffuse->fallthrough();

  static std::string graph;
  static std::string game = "2,1,0,0";
  static double epsilon = 0.0;
  static std::string init;
  static int64_t horizon = 0;
  static std::string schedule = "uniform-random";

  auto config = [&run] {
    run.Param("graph", graph);
    run.Param("game", game);
    run.Param("epsilon", std::to_string(epsilon));
    run.Param("init", init);
    run.Param("horizon", std::to_string(horizon));
    run.Param("schedule", schedule);
    DiffusionConfig cfg;
    cfg.epsilon = epsilon;
    cfg.init_adopters = ParseSubset(init);
    cfg.seed = run.flags().seed;
    cfg.schedule = ParseSchedule(schedule);
    return cfg;
  };
  auto add_common = [](CLI::App* sub) {
    sub->add_option("--graph", graph)->required();
    sub->add_option("--game", game, "Payoffs a,b,c,d");
    sub->add_option("--epsilon", epsilon);
    sub->add_option("--init", init, "Initial adopters, comma-separated");
    sub->add_option("--horizon", horizon, "Max revisions (default 200 n)");
    sub->add_option("--schedule", schedule, "uniform-random | round-robin");
  };

  static bool csv = false;
  auto* one = reg.Add(diffuse, "run", "Single trajectory", "diffuse run", [&run, config] {
    DiffusionConfig cfg = config();
    const LabeledGraph g = LoadGraph(graph);
    cfg.horizon = horizon > 0 ? horizon : 200 * static_cast<int64_t>(g.order());
    const CoordinationGame parsed = ParseGame(game);
    const Trace trace = Run(g, parsed, cfg);
    if (csv) {
      run.Emit(run.CsvHeader() + TraceCsv(trace));
      return;
    }
    json doc = {{"metadata", run.Metadata()},
                {"threshold", FormatRational(RiskThreshold(parsed))},
                {"revisions", trace.adopters.size() - 1},
                {"final_adopters", trace.adopters.back()},
                {"hit_all", trace.hit_all ? json(*trace.hit_all) : json(nullptr)},
                {"hit_success",
                 trace.hit_success ? json(*trace.hit_success) : json(nullptr)}};
    run.Emit(doc.dump(2));
  });
  add_common(one);
  one->add_flag("--csv", csv, "Emit the adoption curve as CSV");

  auto* stats = reg.Add(diffuse, "stats", "Hitting-time statistics over trials",
                        "diffuse stats", [&run, config] {
    DiffusionConfig cfg = config();
    const LabeledGraph g = LoadGraph(graph);
    cfg.horizon = horizon > 0 ? horizon : 200 * static_cast<int64_t>(g.order());
    run.Param("trials", std::to_string(run.flags().trials));
    const HittingStats s = HittingTimeStats(g, ParseGame(game), cfg,
                                            run.flags().trials, run.flags().jobs);
    auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    json times = json::array();
    for (const auto& h : s.hitting_times) times.push_back(h ? json(*h) : json(nullptr));
    json doc = {{"metadata", run.Metadata()},
                {"trials", s.trials},
                {"successes", s.successes},
                {"success_rate", s.success_rate},
                {"median", opt(s.median)},
                {"lower_quartile", opt(s.lower_quartile)},
                {"upper_quartile", opt(s.upper_quartile)},
                {"hitting_times", times}};
    run.Emit(doc.dump(2));
  });
  add_common(stats);
}

void AddExperiment(Registry& reg, CLI::App* root) {
  Runner& run = *reg.runner;
  CLI::App* exp = root->add_subcommand("experiment", "Sampling experiments and sweeps");
  exp->require_subcommand(1);
  exp->fallthrough();

  static int n = 10;
  static std::string pattern = "K3";
  auto* containment = reg.Add(exp, "containment", "Induced copies in G(n,1/2)",
                              "experiment containment", [&run] {
    run.Param("n", std::to_string(n));
    run.Param("pattern", pattern);
    run.Param("trials", std::to_string(run.flags().trials));
    const LabeledGraph h = LoadGraph(pattern);
    const ContainmentReport r = ContainmentExperiment(
        n, h, run.flags().trials, run.flags().seed, run.flags().jobs);
    const MomentReport m = ExpectedOccurrences(n, h);
    json doc = {{"metadata", run.Metadata()},
                {"trials", r.trials},
                {"mean", r.mean},
                {"variance", r.variance},
                {"frequency", r.frequency},
                {"expected_isomorphic", m.expected_isomorphic.str()},
                {"expected_isomorphic_value",
                 m.expected_isomorphic.convert_to<double>()}};
    run.Emit(doc.dump(2));
  });
  containment->add_option("--n", n);
  containment->add_option("--pattern", pattern);

  auto* moments = reg.Add(exp, "moments", "Exact first-moment counts",
                          "experiment moments", [&run] {
    run.Param("n", std::to_string(n));
    run.Param("pattern", pattern);
    const MomentReport m = ExpectedOccurrences(n, LoadGraph(pattern));
    json doc = {{"aut_count", m.aut_count},
                {"expected_labelled", m.expected_labelled.str()},
                {"expected_isomorphic", m.expected_isomorphic.str()},
                {"expected_isomorphic_value",
                 m.expected_isomorphic.convert_to<double>()}};
    run.Emit(doc.dump(2));
  });
  moments->add_option("--n", n);
  moments->add_option("--pattern", pattern);

  static std::string levels = "1,2";
  static int n_min = 2;
  static int n_max = 16;
  auto* sweep = reg.Add(exp, "sweep", "Codec gain and bounds against n",
                        "experiment sweep", [&run] {
    run.Param("levels", levels);
    run.Param("n_min", std::to_string(n_min));
    run.Param("n_max", std::to_string(n_max));
    run.Param("trials", std::to_string(run.flags().trials));
    SweepOptions options;
    options.trials = run.flags().trials;
    options.seed = run.flags().seed;
    options.jobs = run.flags().jobs;
    run.Emit(run.CsvHeader() +
             SweepCsv(ThresholdSweep(ParseIntList(levels), n_min, n_max, options)));
  });
  sweep->add_option("--levels", levels);
  sweep->add_option("--n-min", n_min);
  sweep->add_option("--n-max", n_max);

  static std::string game = "2,1,0,0";
  static double epsilon = 0.02;
  static int k_cap = 8;
  auto* link = reg.Add(exp, "link", "Close-knit k against diffusion speed",
                       "experiment link", [&run] {
    run.Param("levels", levels);
    run.Param("game", game);
    run.Param("epsilon", std::to_string(epsilon));
    run.Param("k_cap", std::to_string(k_cap));
    run.Param("trials", std::to_string(run.flags().trials));
    DiffusionConfig base;
    base.epsilon = epsilon;
    base.seed = run.flags().seed;
    LinkOptions options;
    options.trials = run.flags().trials;
    options.jobs = run.flags().jobs;
    options.k_cap = k_cap;
    run.Emit(run.CsvHeader() + LinkCsv(CloseKnitDiffusionLink(
                                   ParseIntList(levels), ParseGame(game), base, options)));
  });
  link->add_option("--levels", levels);
  link->add_option("--game", game);
  link->add_option("--epsilon", epsilon);
  link->add_option("--k-cap", k_cap);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knitlab: Sierpinski graphs, close-knit groups, two-part "
               "codes, induced Ramsey checks and diffusion"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "Master seed");
  app.add_option("--format", flags.format, "graph6 | json | dot")
      ->check(CLI::IsMember({"graph6", "json", "dot"}));
  app.add_option("--out", flags.out, "Output path (stdout when absent)");
  app.add_option("--trials", flags.trials, "Trials for sampling commands");
  app.add_option("--mode", flags.mode, "fast | proof-faithful")
      ->check(CLI::IsMember({"fast", "proof-faithful"}));
  app.add_option("--jobs", flags.jobs, "Worker threads; outputs do not depend on it")
      ->check(CLI::PositiveNumber);
  app.add_option("--manifest", flags.manifest, "Write the run manifest as JSON");

  Runner runner(flags);
  Handler selected;
  Registry reg{&app, &runner, &selected};
  AddGen(reg, &app);
  AddCodec(reg, &app);
  AddCloseKnit(reg, &app);
  AddRamsey(reg, &app);
  AddDiffuse(reg, &app);
  AddExperiment(reg, &app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!selected) {
      std::cerr << "error: no command selected\n";
      return 2;
    }
    selected();
    runner.WriteManifest();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
