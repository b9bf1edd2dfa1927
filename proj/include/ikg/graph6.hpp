#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg {

// graph6 record for g (no header, no trailing newline).
std::string write_graph6(const Graph& g);

// Decodes one graph6 record. A leading ">>graph6<<" header and a trailing
// newline are stripped. Throws DecodeError naming the offending byte offset.
Graph parse_graph6(std::string_view line);

// Every non-blank line of the stream, decoded.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace ikg
