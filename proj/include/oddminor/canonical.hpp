#ifndef ODDMINOR_CANONICAL_HPP
#define ODDMINOR_CANONICAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

/// Isomorphism-invariant key: the graph6 encoding of the canonical relabeling.
struct CanonicalLabel
{
    std::string bytes;

    std::string hex() const;

    auto operator<=>(const CanonicalLabel &) const = default;
};

struct CanonicalForm
{
    Graph graph;
    /// position[v] is the index of v in the canonical form.
    std::vector<int> position;
};

inline constexpr int canonical_max_order = 16;

/// Individualization-refinement search with automorphism pruning. Throws Unsupported
/// for graphs on more than canonical_max_order vertices.
CanonicalForm canonical_form(const Graph & g);
CanonicalLabel canonical_label(const Graph & g);

bool isomorphic(const Graph & a, const Graph & b);

} // namespace oddminor

#endif
