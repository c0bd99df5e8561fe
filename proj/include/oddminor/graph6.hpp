#ifndef ODDMINOR_GRAPH6_HPP
#define ODDMINOR_GRAPH6_HPP

#include <string>
#include <string_view>

#include "oddminor/graph.hpp"

namespace oddminor {

/// Decodes a short-form graph6 line (n <= 62). An optional ">>graph6<<" prefix and a
/// trailing line terminator are accepted; anything else malformed throws MalformedGraph6.
Graph parse_graph6(std::string_view line);

/// Encodes g in short-form graph6 with zero padding; never emits the header.
std::string to_graph6(const Graph & g);

} // namespace oddminor

#endif
