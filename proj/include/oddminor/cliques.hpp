#ifndef ODDMINOR_CLIQUES_HPP
#define ODDMINOR_CLIQUES_HPP

#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

/// A maximum clique; among those, the lexicographically smallest.
VertexSet maximum_clique(const Graph & g);

/// A maximum independent set; among those, the lexicographically smallest.
VertexSet maximum_independent_set(const Graph & g);

/// Maximal cliques, largest first, ties in lexicographic order.
std::vector<VertexSet> maximal_cliques(const Graph & g);

/// Every nonempty clique, in lexicographic order of member lists.
std::vector<VertexSet> all_cliques(const Graph & g);

} // namespace oddminor

#endif
