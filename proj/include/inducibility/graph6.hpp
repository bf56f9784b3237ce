#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "inducibility/graph.hpp"

namespace inducibility {

// Standard graph6 (McKay) encoding. An optional ">>graph6<<" prefix and a
// trailing line terminator are accepted on input; output never carries them.
// Throws ParseError with the offending byte offset.
Graph parse_graph6(std::string_view text);

// Throws RangeError when the graph has more than 64 vertices.
std::string write_graph6(const Graph& g);

// One graph per non-empty line.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace inducibility
