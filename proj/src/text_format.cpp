// Copyright 2026 The noisecut Authors
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

#include "noisecut/text_format.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "noisecut/errors.hpp"

namespace noisecut {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::uint32_t parse_multiplicity(const Line& line, const std::string& tok) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value == 0) {
    throw ParseError(line.number, "bad multiplicity '" + tok + "'");
  }
  return value;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return in;
}

// Shared node/edge scanning for both graph formats.
struct GraphScan {
  std::vector<std::string> names;
  std::vector<std::string> node_args;  // colour token, or empty
  std::vector<std::size_t> node_lines;
  std::unordered_map<std::string, VertexId> ids;
  struct PendingEdge {
    std::size_t line;
    std::string src, dst;
    std::uint32_t multiplicity;
  };
  std::vector<PendingEdge> edges;

  VertexId resolve(std::size_t line, const std::string& name) const {
    auto it = ids.find(name);
    if (it == ids.end()) {
      throw ParseError(line, "unknown node '" + name + "'");
    }
    return it->second;
  }
};

GraphScan scan_graph(std::istream& in, bool coloured) {
  GraphScan scan;
  for (const Line& line : tokenize(in)) {
    const std::string& kw = line.tokens[0];
    if (kw == "node") {
      const std::size_t want = coloured ? 3 : 2;
      if (line.tokens.size() != want) {
        throw ParseError(line.number, coloured
                                          ? "expected: node <name> <colour>"
                                          : "expected: node <name>");
      }
      const std::string& name = line.tokens[1];
      if (!scan.ids.emplace(name, static_cast<VertexId>(scan.names.size()))
               .second) {
        throw ParseError(line.number, "duplicate node '" + name + "'");
      }
      scan.names.push_back(name);
      scan.node_args.push_back(coloured ? line.tokens[2] : std::string());
      scan.node_lines.push_back(line.number);
    } else if (kw == "edge") {
      const std::size_t max_tokens = coloured ? 4 : 3;
      if (line.tokens.size() < 3 || line.tokens.size() > max_tokens) {
        throw ParseError(line.number,
                         coloured ? "expected: edge <src> <dst> [multiplicity]"
                                  : "expected: edge <src> <dst>");
      }
      std::uint32_t mult = 1;
      if (line.tokens.size() == 4) {
        mult = parse_multiplicity(line, line.tokens[3]);
      }
      scan.edges.push_back({line.number, line.tokens[1], line.tokens[2], mult});
    } else {
      throw ParseError(line.number, "unknown directive '" + kw + "'");
    }
  }
  return scan;
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
  GraphScan scan = scan_graph(in, /*coloured=*/true);
  std::vector<Color> colors;
  colors.reserve(scan.names.size());
  for (std::size_t i = 0; i < scan.names.size(); ++i) {
    auto c = parse_color(scan.node_args[i]);
    if (!c) {
      throw ParseError(scan.node_lines[i],
                       "unknown colour '" + scan.node_args[i] + "'");
    }
    colors.push_back(*c);
  }
  std::vector<RawEdge> edges;
  edges.reserve(scan.edges.size());
  for (const auto& e : scan.edges) {
    edges.push_back(
        {scan.resolve(e.line, e.src), scan.resolve(e.line, e.dst),
         e.multiplicity});
  }
  return validate(std::move(colors), std::move(edges), std::move(scan.names));
}

Circuit parse_circuit_string(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

Circuit read_circuit_file(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_circuit(in);
}

void print_circuit(std::ostream& out, const Circuit& circuit) {
  for (VertexId v = 0; v < circuit.size(); ++v) {
    out << "node " << circuit.name(v) << ' ' << to_string(circuit.color(v))
        << '\n';
  }
  for (const RawEdge& e : circuit.edges()) {
    out << "edge " << circuit.name(e.src) << ' ' << circuit.name(e.dst);
    if (e.multiplicity != 1) out << ' ' << e.multiplicity;
    out << '\n';
  }
}

std::string circuit_to_string(const Circuit& circuit) {
  std::ostringstream out;
  print_circuit(out, circuit);
  return out.str();
}

MarkSet parse_marks(std::istream& in, const Circuit& circuit) {
  MarkSet marks(circuit.size());
  for (const Line& line : tokenize(in)) {
    for (const std::string& tok : line.tokens) {
      auto v = circuit.find(tok);
      if (!v) throw ParseError(line.number, "unknown node '" + tok + "'");
      marks.insert(*v);
    }
  }
  return marks;
}

MarkSet read_marks_file(const std::string& path, const Circuit& circuit) {
  auto in = open_or_throw(path);
  return parse_marks(in, circuit);
}

DvdInstance parse_dvd(std::istream& in, int budget) {
  GraphScan scan = scan_graph(in, /*coloured=*/false);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : scan.edges) {
    edges.emplace_back(scan.resolve(e.line, e.src),
                       scan.resolve(e.line, e.dst));
  }
  const std::size_t n = scan.names.size();
  return make_dvd_instance(n, std::move(edges), budget, std::move(scan.names));
}

DvdInstance read_dvd_file(const std::string& path, int budget) {
  auto in = open_or_throw(path);
  return parse_dvd(in, budget);
}

void print_dvd(std::ostream& out, const DvdInstance& h) {
  for (VertexId v = 0; v < h.size(); ++v) out << "node " << h.name(v) << '\n';
  for (const auto& [a, b] : h.edges()) {
    out << "edge " << h.name(a) << ' ' << h.name(b) << '\n';
  }
}

void print_provenance(std::ostream& out, const ReductionMap& map,
                      const DvdInstance& h) {
  for (VertexId v = 0; v < map.circuit.size(); ++v) {
    out << map.circuit.name(v) << ' ';
    switch (map.role[v]) {
      case ReducedRole::kOriginal:
        out << "original " << h.name(map.owner[v]);
        break;
      case ReducedRole::kClone:
        out << "clone " << h.name(map.owner[v]);
        break;
      case ReducedRole::kGadget:
        out << "gadget " << h.name(map.owner[v]);
        break;
      case ReducedRole::kSource:
        out << "source";
        break;
    }
    out << '\n';
  }
}

}  // namespace noisecut
