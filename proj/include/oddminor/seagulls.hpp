#ifndef ODDMINOR_SEAGULLS_HPP
#define ODDMINOR_SEAGULLS_HPP

#include <optional>
#include <vector>

#include "oddminor/graph.hpp"

namespace oddminor {

/// An induced path wing1 - center - wing2 with wing1 < wing2.
struct Seagull
{
    int wing1 = 0;
    int center = 0;
    int wing2 = 0;

    VertexSet support() const { return VertexSet{wing1, center, wing2}; }

    auto operator<=>(const Seagull &) const = default;
};

bool is_seagull(const Graph & g, const Seagull & s);

struct SeagullPacking
{
    std::vector<Seagull> seagulls;

    VertexSet support() const;
};

/// True iff every member is a seagull of g and the supports are pairwise disjoint.
bool verify_packing(const Graph & g, const SeagullPacking & p);

/// All seagulls, ordered by center, then wing1, then wing2.
std::vector<Seagull> enumerate_seagulls(const Graph & g);

/// Vertices outside k that are neither complete nor anticomplete to k.
/// Throws NotAClique unless k is a nonempty clique of g.
VertexSet boundary(const Graph & g, VertexSet k);

/// A value in (1/2)Z stored doubled.
struct HalfInteger
{
    int twice = 0;

    double value() const { return twice / 2.0; }

    auto operator<=>(const HalfInteger &) const = default;
};

/// (|G| + |K*| - |K|) / 2
HalfInteger capacity(const Graph & g, VertexSet k);

inline constexpr int packing_max_order = 20;

/// A packing of exactly ell seagulls, if one exists. Depth-first: the lowest available
/// vertex is either covered by a seagull (tried in enumeration order) or left out.
/// Throws Unsupported when g has more than packing_max_order vertices.
std::optional<SeagullPacking> max_seagull_packing(const Graph & g, int ell);

struct ConditionReport
{
    int ell = 0;
    bool cond_order = false;
    bool cond_connectivity = false;
    bool cond_capacity = false;
    bool cond_antimatching = false;
    /// g is K1+C5 and ell == 2
    bool exceptional = false;
    /// Present iff cond_capacity is false: a clique of capacity below ell.
    std::optional<VertexSet> violating_clique;
    /// Present iff cond_connectivity is false: a vertex set of size below ell whose
    /// removal disconnects g (all but one vertex when g is complete).
    std::optional<VertexSet> violating_cut;

    bool all_hold() const { return cond_order && cond_connectivity && cond_capacity && cond_antimatching; }
};

/// The four conditions characterising graphs with alpha <= 2 that carry ell
/// disjoint seagulls. The capacity condition is evaluated over every nonempty clique.
ConditionReport cs_conditions(const Graph & g, int ell);

/// Same, but the capacity condition only over maximal cliques.
bool capacity_condition_maximal_only(const Graph & g, int ell);

enum class HypothesisReason
{
    Holds,
    NotConnectedEnough,
    CliqueOutsideWindow,
};

struct SeagullHypothesis
{
    HypothesisReason reason = HypothesisReason::Holds;
    /// Set when reason == Holds.
    std::optional<VertexSet> clique;
    int needed = 0;
};

/// Checks the premise of the disjoint-seagull theorem for graphs with alpha <= 2:
/// g is ceil(n/2)-connected and a largest clique K satisfies
/// (3/2)ceil(n/2) - n/2 <= |K| <= ceil(n/2). On success needed = ceil(n/2) - |K|.
SeagullHypothesis seagulls2_hypothesis(const Graph & g);

} // namespace oddminor

#endif
