#ifndef ODDMINOR_CONSTRUCTORS_HPP
#define ODDMINOR_CONSTRUCTORS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddminor/expansion.hpp"
#include "oddminor/seagulls.hpp"

namespace oddminor {

struct TraceStep
{
    std::string strategy;
    std::vector<int> consumed;
    int gained = 0;
};

/// Audit trail of a construction; gains sum to the certificate order.
struct ConstructionTrace
{
    std::vector<TraceStep> steps;

    int total_gained() const;
    bool used(const std::string & strategy) const;
};

struct Certified
{
    OddExpansionCertificate certificate;
    ConstructionTrace trace;
};

/// Clique vertices become singleton branches coloured 0, each seagull a branch with wings
/// coloured 0 and centre 1. With alpha(g) <= 2 every required monochromatic connection exists.
/// Throws PreconditionFailed if alpha(g) > 2, k is not a clique, or the supports overlap.
OddExpansionCertificate certify_clique_plus_seagulls(const Graph & g, VertexSet k, const SeagullPacking & p);

/// Recursion for graphs whose complement has maximum degree <= 2: each odd complement cycle
/// a_1..a_{2k+1} (k >= 2) yields singletons a_1, a_3, .., a_{2k-1} and the seagull
/// a_{2k} - a_2 - a_{2k+1}; the remainder contributes a maximum independent set of the
/// complement as singletons. Order >= ceil(n / alpha(g)).
/// Throws PreconditionFailed if delta(g) < n - 3.
Certified certify_min_degree(const Graph & g);

/// A nonadjacent pair (x, y) with N(x) ⊆ N(y), lowest x then lowest y.
std::optional<std::pair<int, int>> reduce_dominated_pair(const Graph & g);

/// c1 and c2 certify g[part1] and g[part2] (vertices relabeled ascending). The parts must be
/// disjoint and complete to each other. Both are normalised so singletons carry colour 0; every
/// cross pair then has a monochromatic join edge. Order c1.t + c2.t.
OddExpansionCertificate compose_join(const Graph & g, VertexSet part1, VertexSet part2,
        const OddExpansionCertificate & c1, const OddExpansionCertificate & c2);

struct AutoCertifyOptions
{
    /// Allow the exhaustive search as a last resort.
    bool allow_search = true;
    SearchBudget * budget = nullptr;
};

/// Tries, in order: dominated-pair reduction, join split, the min-degree recursion, clique plus
/// seagull packing (maximal cliques, largest first), exhaustive search. Returns the first
/// verifying certificate of order >= target. Returns nullopt only when search is disallowed
/// and every construction failed; throws Exhausted when search proves no such certificate,
/// SearchTimeout when the budget runs out. Requires alpha(g) <= 2.
std::optional<Certified> auto_certify(const Graph & g, int target, const AutoCertifyOptions & options = {});

/// Individual strategies, each nullopt when it does not apply or falls short of target.
std::optional<Certified> certify_by_clique_seagulls(const Graph & g, int target);
std::optional<Certified> certify_by_join(const Graph & g, int target, const AutoCertifyOptions & options = {});
std::optional<Certified> certify_by_search(const Graph & g, int target, SearchBudget & budget);

} // namespace oddminor

#endif
