#include "oddminor/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oddminor {

const char * to_string(ViolationKind k)
{
    switch (k) {
        case ViolationKind::Malformed: return "Malformed";
        case ViolationKind::OverlappingBranches: return "OverlappingBranches";
        case ViolationKind::ColoringDomainMismatch: return "ColoringDomainMismatch";
        case ViolationKind::NonTreeBranch: return "NonTreeBranch";
        case ViolationKind::MonochromaticTreeEdge: return "MonochromaticTreeEdge";
        case ViolationKind::MissingConnection: return "MissingConnection";
        case ViolationKind::BichromaticConnection: return "BichromaticConnection";
    }
    return "?";
}

void SearchBudget::charge(std::uint64_t nodes)
{
    used += nodes;
    if (used > limit)
        throw SearchTimeout(limit);
}

namespace {
    Violation violation(ViolationKind k, std::string detail, std::vector<int> vertices = {})
    {
        return Violation{k, std::move(detail), std::move(vertices)};
    }

    std::string edge_text(Edge e)
    {
        return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    }

    int find(std::vector<int> & parent, int v)
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }
}

std::optional<Violation> verify_certificate(const Graph & g, const OddExpansionCertificate & c)
{
    const int n = g.order();
    auto in_range = [&] (int v) { return v >= 0 && v < n; };

    // structure
    if (c.t < 0 || c.t != static_cast<int>(c.branches.size()))
        return violation(ViolationKind::Malformed, "t = " + std::to_string(c.t) + " but "
                + std::to_string(c.branches.size()) + " branches");
    for (std::size_t i = 0 ; i < c.branches.size() ; ++i) {
        const auto & b = c.branches[i];
        if (b.vertices.empty())
            return violation(ViolationKind::Malformed, "branch " + std::to_string(i) + " is empty");
        std::set<int> seen;
        for (int v : b.vertices) {
            if (! in_range(v))
                return violation(ViolationKind::Malformed, "vertex " + std::to_string(v) + " out of range", {v});
            if (! seen.insert(v).second)
                return violation(ViolationKind::Malformed, "vertex " + std::to_string(v) + " repeated within branch "
                        + std::to_string(i), {v});
        }
        for (auto e : b.tree_edges)
            if (! in_range(e.u) || ! in_range(e.v))
                return violation(ViolationKind::Malformed, "tree edge " + edge_text(e) + " out of range", {e.u, e.v});
    }
    for (auto [v, col] : c.colors)
        if (! in_range(v) || (col != 0 && col != 1))
            return violation(ViolationKind::Malformed, "bad colour entry for vertex " + std::to_string(v), {v});
    {
        std::set<std::pair<int, int>> pairs;
        for (const auto & conn : c.connections) {
            if (conn.branch_a < 0 || conn.branch_b >= c.t || conn.branch_a >= conn.branch_b)
                return violation(ViolationKind::Malformed, "connection for invalid branch pair ("
                        + std::to_string(conn.branch_a) + "," + std::to_string(conn.branch_b) + ")");
            if (! in_range(conn.edge.u) || ! in_range(conn.edge.v))
                return violation(ViolationKind::Malformed, "connection edge " + edge_text(conn.edge) + " out of range");
            if (! pairs.insert({conn.branch_a, conn.branch_b}).second)
                return violation(ViolationKind::Malformed, "duplicate connection for branch pair ("
                        + std::to_string(conn.branch_a) + "," + std::to_string(conn.branch_b) + ")");
        }
    }

    // disjointness
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0 ; i < c.branches.size() ; ++i)
        for (int v : c.branches[i].vertices) {
            if (owner[v] != -1)
                return violation(ViolationKind::OverlappingBranches, "vertex " + std::to_string(v) + " lies in branches "
                        + std::to_string(owner[v]) + " and " + std::to_string(i), {v});
            owner[v] = static_cast<int>(i);
        }

    // colouring domain
    for (int v = 0 ; v < n ; ++v) {
        bool coloured = c.colors.contains(v);
        if (coloured != (owner[v] != -1))
            return violation(ViolationKind::ColoringDomainMismatch, coloured
                    ? "vertex " + std::to_string(v) + " is coloured but in no branch"
                    : "vertex " + std::to_string(v) + " is in a branch but uncoloured", {v});
    }

    // spanning trees
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0 ; i < c.branches.size() ; ++i) {
        const auto & b = c.branches[i];
        const std::string name = "branch " + std::to_string(i);
        if (b.tree_edges.size() + 1 != b.vertices.size())
            return violation(ViolationKind::NonTreeBranch, name + " has " + std::to_string(b.tree_edges.size())
                    + " tree edges for " + std::to_string(b.vertices.size()) + " vertices", b.vertices);
        for (auto e : b.tree_edges) {
            if (owner[e.u] != static_cast<int>(i) || owner[e.v] != static_cast<int>(i))
                return violation(ViolationKind::NonTreeBranch, name + " tree edge " + edge_text(e) + " leaves the branch",
                        {e.u, e.v});
            if (e.u == e.v || ! g.adjacent(e.u, e.v))
                return violation(ViolationKind::NonTreeBranch, name + " tree edge " + edge_text(e) + " is not a graph edge",
                        {e.u, e.v});
            int a = find(parent, e.u), z = find(parent, e.v);
            if (a == z)
                return violation(ViolationKind::NonTreeBranch, name + " tree edge " + edge_text(e) + " closes a cycle",
                        {e.u, e.v});
            parent[a] = z;
        }
    }

    // tree edge colours
    for (const auto & b : c.branches)
        for (auto e : b.tree_edges)
            if (c.colors.at(e.u) == c.colors.at(e.v))
                return violation(ViolationKind::MonochromaticTreeEdge, "tree edge " + edge_text(e) + " is monochromatic",
                        {e.u, e.v});

    // connections
    std::map<std::pair<int, int>, Edge> joined;
    for (const auto & conn : c.connections)
        joined[{conn.branch_a, conn.branch_b}] = conn.edge;
    for (int a = 0 ; a < c.t ; ++a)
        for (int b = a + 1 ; b < c.t ; ++b) {
            auto it = joined.find({a, b});
            const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            if (it == joined.end())
                return violation(ViolationKind::MissingConnection, "no connection for branch pair " + pair);
            Edge e = it->second;
            if (owner[e.u] != a || owner[e.v] != b || ! g.adjacent(e.u, e.v))
                return violation(ViolationKind::MissingConnection, "connection " + edge_text(e)
                        + " does not join branch pair " + pair + " by a graph edge", {e.u, e.v});
        }
    for (int a = 0 ; a < c.t ; ++a)
        for (int b = a + 1 ; b < c.t ; ++b) {
            Edge e = joined.at({a, b});
            if (c.colors.at(e.u) != c.colors.at(e.v))
                return violation(ViolationKind::BichromaticConnection, "connection " + edge_text(e) + " is bichromatic",
                        {e.u, e.v});
        }

    return std::nullopt;
}

OddExpansionCertificate flipped(OddExpansionCertificate c)
{
    for (auto & [_, col] : c.colors)
        col = 1 - col;
    return c;
}

OddExpansionCertificate relabeled(const OddExpansionCertificate & c, const std::vector<int> & to_host)
{
    OddExpansionCertificate out;
    out.t = c.t;
    for (const auto & b : c.branches) {
        BranchTree nb;
        for (int v : b.vertices)
            nb.vertices.push_back(to_host.at(v));
        std::sort(nb.vertices.begin(), nb.vertices.end());
        for (auto e : b.tree_edges)
            nb.tree_edges.push_back({to_host.at(e.u), to_host.at(e.v)});
        out.branches.push_back(std::move(nb));
    }
    for (auto [v, col] : c.colors)
        out.colors[to_host.at(v)] = col;
    for (const auto & conn : c.connections)
        out.connections.push_back({conn.branch_a, conn.branch_b, {to_host.at(conn.edge.u), to_host.at(conn.edge.v)}});
    return out;
}

std::optional<int> singleton_color(const OddExpansionCertificate & c)
{
    for (const auto & b : c.branches)
        if (b.vertices.size() == 1)
            return c.colors.at(b.vertices.front());
    return std::nullopt;
}

OddExpansionCertificate clique_certificate(const Graph & g, VertexSet k)
{
    if (! g.is_clique(k))
        throw NotAClique("clique certificate needs a clique");
    std::vector<VertexSet> branches;
    std::map<int, int> colors;
    for (int v : k) {
        branches.push_back(VertexSet::singleton(v));
        colors[v] = 0;
    }
    return *assemble_certificate(g, branches, colors);
}

std::optional<OddExpansionCertificate> assemble_certificate(const Graph & g, const std::vector<VertexSet> & branches,
        const std::map<int, int> & colors)
{
    OddExpansionCertificate c;
    c.t = static_cast<int>(branches.size());
    c.colors = colors;

    std::vector<VertexSet> zero(branches.size()), one(branches.size());
    for (std::size_t i = 0 ; i < branches.size() ; ++i) {
        for (int v : branches[i])
            (colors.at(v) == 0 ? zero[i] : one[i]).insert(v);

        BranchTree tree;
        tree.vertices = branches[i].to_vector();
        VertexSet reached = VertexSet::singleton(branches[i].first());
        std::vector<int> queue{branches[i].first()};
        for (std::size_t q = 0 ; q < queue.size() ; ++q) {
            int v = queue[q];
            VertexSet other_side = colors.at(v) == 0 ? one[i] : zero[i];
            for (int u : (g.neighbors(v) & other_side) - reached) {
                reached.insert(u);
                queue.push_back(u);
                tree.tree_edges.push_back({std::min(u, v), std::max(u, v)});
            }
        }
        if (reached != branches[i])
            return std::nullopt;
        c.branches.push_back(std::move(tree));
    }

    for (std::size_t a = 0 ; a < branches.size() ; ++a)
        for (std::size_t b = a + 1 ; b < branches.size() ; ++b) {
            std::optional<Edge> best;
            for (int u : branches[a]) {
                VertexSet same = colors.at(u) == 0 ? zero[b] : one[b];
                VertexSet hits = g.neighbors(u) & same;
                if (! hits.empty()) {
                    best = Edge{u, hits.first()};
                    break;
                }
            }
            if (! best)
                return std::nullopt;
            c.connections.push_back({static_cast<int>(a), static_cast<int>(b), *best});
        }
    return c;
}

} // namespace oddminor
