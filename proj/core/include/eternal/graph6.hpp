#pragma once

#include <string>
#include <string_view>

#include "eternal/graph.hpp"

namespace eternal {

// graph6 codec (McKay's formats.txt). Accepts an optional ">>graph6<<" header
// and a trailing newline; throws ParseError with the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace eternal
