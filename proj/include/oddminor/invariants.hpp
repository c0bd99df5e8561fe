#ifndef ODDMINOR_INVARIANTS_HPP
#define ODDMINOR_INVARIANTS_HPP

#include <optional>
#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

int independence_number(const Graph & g);
int clique_number(const Graph & g);
int min_degree(const Graph & g);
int max_degree(const Graph & g);

/// Maximum matching (Edmonds' blossom algorithm). mate[v] is v's partner or -1.
std::vector<int> maximum_matching(const Graph & g);
int max_matching(const Graph & g);

inline constexpr int chromatic_exact_max_order = 16;

/// Branch-and-bound over colour classes with a clique lower bound; n <= 16.
int chromatic_number_exact(const Graph & g);

/// When alpha(g) <= 2 every colour class has at most two vertices, so chi is
/// n minus a maximum anti-matching. Otherwise falls back to the exact search.
int chromatic_number(const Graph & g);

/// Exact vertex connectivity via unit-capacity vertex-split flow, with
/// kappa(K_n) = n - 1.
int vertex_connectivity(const Graph & g);

/// A minimum separating vertex set, or for a complete graph all but its last vertex.
VertexSet minimum_vertex_cut(const Graph & g);

/// Maximum number of internally vertex-disjoint s-t paths for nonadjacent s, t.
int local_connectivity(const Graph & g, int s, int t);

struct InvariantReport
{
    int n = 0;
    int alpha = 0;
    int omega = 0;
    int chi = 0;
    int delta = 0;
    int Delta = 0;
    int kappa = 0;
    int max_matching_complement = 0;

    friend bool operator==(const InvariantReport &, const InvariantReport &) = default;
};

InvariantReport invariant_report(const Graph & g);

} // namespace oddminor

#endif
