#pragma once

#include <string>
#include <string_view>

#include "cocrit/graph.hpp"

namespace cocrit {

// Canonical graph6: short header for n <= 62, three-byte long header for
// 63 <= n < 258048.  Parsing rejects bad characters, malformed or oversized
// headers, wrong body length, and nonzero padding bits.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

}  // namespace cocrit
