#ifndef ODDMINOR_EXPANSION_HPP
#define ODDMINOR_EXPANSION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

struct BranchTree
{
    /// Ascending.
    std::vector<int> vertices;
    std::vector<Edge> tree_edges;

    friend bool operator==(const BranchTree &, const BranchTree &) = default;
};

/// The designated edge joining branches a < b, with edge.u in branch a and edge.v in branch b.
struct Connection
{
    int branch_a = 0;
    int branch_b = 0;
    Edge edge;

    friend bool operator==(const Connection &, const Connection &) = default;
};

/// Witness that a graph contains an odd K_t-expansion: t disjoint trees whose
/// edges are bichromatic, pairwise joined by a designated monochromatic edge.
struct OddExpansionCertificate
{
    int t = 0;
    std::vector<BranchTree> branches;
    /// vertex -> colour in {0, 1}, defined exactly on the branch vertices
    std::map<int, int> colors;
    std::vector<Connection> connections;

    friend bool operator==(const OddExpansionCertificate &, const OddExpansionCertificate &) = default;
};

enum class ViolationKind
{
    /// Structural problems: t disagrees with the branch count, vertices out of range,
    /// empty branches, colours other than 0/1, connection entries for unknown pairs.
    Malformed,
    OverlappingBranches,
    ColoringDomainMismatch,
    NonTreeBranch,
    MonochromaticTreeEdge,
    MissingConnection,
    BichromaticConnection,
};

const char * to_string(ViolationKind);

struct Violation
{
    ViolationKind kind;
    std::string detail;
    std::vector<int> vertices;
};

/// Checks, in order: structure, disjointness, colouring domain, spanning trees, tree-edge
/// colours, connection presence and placement, connection colours. Returns the first failure.
std::optional<Violation> verify_certificate(const Graph & g, const OddExpansionCertificate & c);

/// Swaps colours 0 and 1 everywhere; preserves validity.
OddExpansionCertificate flipped(OddExpansionCertificate c);

/// Maps every vertex v of c to to_host[v].
OddExpansionCertificate relabeled(const OddExpansionCertificate & c, const std::vector<int> & to_host);

/// Colour shared by the singleton branches (they are pairwise adjacent and joined
/// monochromatically), or nullopt if there are none.
std::optional<int> singleton_color(const OddExpansionCertificate & c);

/// Builds a certificate from branch vertex sets and a colouring: each tree is a BFS tree over
/// bichromatic edges from the branch minimum, each connection the lexicographically lowest
/// monochromatic edge. Returns nullopt if some branch is not spanned or some pair is unjoined.
std::optional<OddExpansionCertificate> assemble_certificate(const Graph & g, const std::vector<VertexSet> & branches,
        const std::map<int, int> & colors);

/// Node budget for the exact searches.
struct SearchBudget
{
    std::uint64_t limit = 100'000'000;
    std::uint64_t used = 0;

    /// Throws SearchTimeout once the limit is exceeded.
    void charge(std::uint64_t nodes = 1);
};

inline constexpr int expansion_search_max_order = 14;

/// Exhaustive search for an odd K_t-expansion. nullopt means none exists. Throws
/// SearchTimeout if the budget runs out and Unsupported beyond expansion_search_max_order.
std::optional<OddExpansionCertificate> has_odd_clique_expansion(const Graph & g, int t, SearchBudget & budget);
std::optional<OddExpansionCertificate> has_odd_clique_expansion(const Graph & g, int t);

/// The clique-of-singletons certificate on a clique k, all coloured 0.
OddExpansionCertificate clique_certificate(const Graph & g, VertexSet k);

struct OhResult
{
    int value = 0;
    OddExpansionCertificate certificate;
};

/// oh(g) with a certificate of that order; absence at value + 1 is confirmed by search.
OhResult odd_hadwiger_number(const Graph & g, SearchBudget & budget);
OhResult odd_hadwiger_number(const Graph & g);

} // namespace oddminor

#endif
