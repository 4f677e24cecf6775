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

#ifndef NOISECUT_TEXT_FORMAT_HPP_
#define NOISECUT_TEXT_FORMAT_HPP_

#include <iosfwd>
#include <string>

#include "noisecut/circuit.hpp"
#include "noisecut/dvd.hpp"

// Line-oriented text formats. '#' starts a comment; tokens are separated by
// whitespace.
//
//   circuit:  node <name> <white|blue|red>
//             edge <src> <dst> [multiplicity]
//   dvd:      node <name>
//             edge <src> <dst>
//   marks:    <name> ...            (any number of names per line)
//
// Ids follow declaration order of `node` lines. Edges may reference nodes
// declared later in the file.

namespace noisecut {

// Throws ParseError (with line number) on malformed input and the circuit
// validation errors on structurally invalid graphs.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_string(const std::string& text);
Circuit read_circuit_file(const std::string& path);

// Canonical form: nodes in id order, then merged edges in (src, dst) order;
// multiplicity is omitted when 1. parse_circuit(print_circuit(c)) == c.
void print_circuit(std::ostream& out, const Circuit& circuit);
std::string circuit_to_string(const Circuit& circuit);

MarkSet parse_marks(std::istream& in, const Circuit& circuit);
MarkSet read_marks_file(const std::string& path, const Circuit& circuit);

DvdInstance parse_dvd(std::istream& in, int budget);
DvdInstance read_dvd_file(const std::string& path, int budget);
void print_dvd(std::ostream& out, const DvdInstance& h);

// One line per circuit vertex: <name> <original|clone|gadget|source> [owner].
void print_provenance(std::ostream& out, const ReductionMap& map,
                      const DvdInstance& h);

}  // namespace noisecut

#endif  // NOISECUT_TEXT_FORMAT_HPP_
