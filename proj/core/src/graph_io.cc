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

#include "knitlab/graph_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace knitlab {
namespace {

using json = nlohmann::json;

void AppendSize(std::string& out, int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
}

int Sextet(char c) {
  const int value = static_cast<unsigned char>(c) - 63;
  if (value < 0 || value > 63) {
    throw Error(std::string("graph6: invalid character '") + c + "'");
  }
  return value;
}

}  // namespace

std::string ToGraph6(const LabeledGraph& graph) {
  const int n = graph.order();
  std::string out;
  AppendSize(out, n);
  // Upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (graph.HasEdge(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

LabeledGraph FromGraph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Error("graph6: empty input");
  size_t pos = 0;
  int64_t n = 0;
  if (text[0] != 126) {
    n = Sextet(text[0]);
    pos = 1;
  } else if (text.size() > 1 && text[1] != 126) {
    if (text.size() < 4) throw Error("graph6: truncated size field");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | Sextet(text[k]);
    pos = 4;
  } else {
    if (text.size() < 8) throw Error("graph6: truncated size field");
    for (int k = 2; k <= 7; ++k) n = (n << 6) | Sextet(text[k]);
    pos = 8;
  }
  if (n > (1 << 24)) throw Error("graph6: vertex count too large");
  const int64_t pairs = PairCount(static_cast<int>(n));
  const int64_t expected = (pairs + 5) / 6;
  if (static_cast<int64_t>(text.size() - pos) != expected) {
    throw Error("graph6: expected " + std::to_string(expected) +
                " data bytes for n=" + std::to_string(n) + ", got " +
                std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  int64_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = Sextet(text[pos + bit / 6]);
      if ((value >> (5 - bit % 6)) & 1) edges.push_back({i + 1, j + 1});
    }
  }
  for (; bit % 6 != 0; ++bit) {
    if ((Sextet(text[pos + bit / 6]) >> (5 - bit % 6)) & 1) {
      throw Error("graph6: non-zero padding bits");
    }
  }
  return LabeledGraph(static_cast<int>(n), std::move(edges));
}

std::string ToJson(const LabeledGraph& graph) {
  json edges = json::array();
  for (const Edge& e : graph.edges()) edges.push_back({e.u, e.v});
  return json{{"n", graph.order()}, {"edges", edges}}.dump();
}

LabeledGraph FromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw Error("graph json: each edge must be a pair [i, j]");
      }
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return LabeledGraph(doc.at("n").get<int>(), std::move(edges));
  } catch (const json::exception& ex) {
    throw Error(std::string("graph json: ") + ex.what());
  }
}

std::string ToDot(const LabeledGraph& graph, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 1; v <= graph.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : graph.edges()) {
    out << "  " << e.u << " -- " << e.v << ";\n";
  }
  out << "}\n";
  return out.str();
}

LabeledGraph ParseGraph(std::string_view text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return FromJson(text);
  }
  if (first != std::string_view::npos) text.remove_prefix(first);
  return FromGraph6(text);
}

LabeledGraph ReadGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str());
}

std::string ColoringToJson(const LabeledGraph& graph,
                           const TwoColoring& coloring) {
  coloring.CheckTotal(graph);
  json out = json::array();
  for (size_t i = 0; i < graph.edges().size(); ++i) {
    const Edge& e = graph.edges()[i];
    out.push_back({e.u, e.v, std::string(ColorName(coloring.of(i)))});
  }
  return out.dump();
}

TwoColoring ColoringFromJson(const LabeledGraph& graph, std::string_view text) {
  try {
    std::vector<std::pair<Edge, Color>> triples;
    for (const auto& item : json::parse(text)) {
      const std::string name = item.at(2).get<std::string>();
      if (name != "red" && name != "blue") {
        throw Error("colouring json: colour must be \"red\" or \"blue\"");
      }
      triples.push_back({{item.at(0).get<int>(), item.at(1).get<int>()},
                         name == "red" ? Color::kRed : Color::kBlue});
    }
    return TwoColoring::FromTriples(graph, triples);
  } catch (const json::exception& ex) {
    throw Error(std::string("colouring json: ") + ex.what());
  }
}

}  // namespace knitlab
