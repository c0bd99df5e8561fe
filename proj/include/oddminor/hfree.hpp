#ifndef ODDMINOR_HFREE_HPP
#define ODDMINOR_HFREE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

struct Pattern
{
    std::string name;
    Graph graph;
    /// One of the six forbidden graphs of the H-free odd Hadwiger theorem.
    bool theorem_pattern = false;
};

/// K1+P4, K2+(K1∪K3), K1+(K1∪K4), K7^-, K7, kite, then the exploratory
/// extras C4, C5, 2K2, W5 = K1+C5.
const std::vector<Pattern> & pattern_library();

/// Throws std::out_of_range for unknown names.
const Pattern & pattern(std::string_view name);

/// K4 minus an edge with a pendant vertex on one of its degree-two vertices.
Graph kite();

/// map[i] is the host vertex playing pattern vertex i.
struct Embedding
{
    std::vector<int> map;

    friend bool operator==(const Embedding &, const Embedding &) = default;
};

/// Lexicographically smallest induced embedding of p into host, if any.
std::optional<Embedding> contains_induced(const Graph & host, const Graph & p);
std::optional<Embedding> contains_induced(const Graph & host, const Pattern & p);

bool is_h_free(const Graph & host, const Pattern & p);

/// True iff map is injective and preserves both edges and non-edges.
bool verify_embedding(const Graph & host, const Graph & p, const Embedding & e);

/// If g is an inflation of an odd cycle of length >= 5, the cliques replacing the
/// cycle vertices in cyclic order, starting from the one holding vertex 0.
std::optional<std::vector<VertexSet>> odd_cycle_inflation(const Graph & g);

} // namespace oddminor

#endif
