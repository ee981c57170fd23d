#ifndef OCDC_GRAPH6_HPP
#define OCDC_GRAPH6_HPP

#include <string>
#include <string_view>

#include "ocdc/graph.hpp"

namespace ocdc {

// graph6 as defined by nauty's formats.txt. Both the one-byte size header
// (n < 63) and the 4-byte form (63 <= n < 258048) are accepted and emitted.
// An optional ">>graph6<<" prefix and trailing newline are ignored on input.

/// Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace ocdc

#endif  // OCDC_GRAPH6_HPP
