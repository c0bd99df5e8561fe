#include "oddminor/hfree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oddminor {

Graph kite()
{
    // K4^- = K2 + 2K1; vertices 2 and 3 have degree two
    Graph k4minus = join(Graph::complete(2), Graph::empty(2));
    return with_vertex(k4minus, VertexSet{2});
}

const std::vector<Pattern> & pattern_library()
{
    static const std::vector<Pattern> library = [] {
        const Graph k1 = Graph::complete(1);
        std::vector<Pattern> p;
        p.push_back({"k1p4", join(k1, Graph::path(4)), true});
        p.push_back({"k2-k1uk3", join(Graph::complete(2), disjoint_union(k1, Graph::complete(3))), true});
        p.push_back({"k1-k1uk4", join(k1, disjoint_union(k1, Graph::complete(4))), true});
        p.push_back({"k7minus", join(Graph::complete(5), Graph::empty(2)), true});
        p.push_back({"k7", Graph::complete(7), true});
        p.push_back({"kite", kite(), true});
        p.push_back({"c4", Graph::cycle(4), false});
        p.push_back({"c5", Graph::cycle(5), false});
        p.push_back({"2k2", disjoint_union(Graph::complete(2), Graph::complete(2)), false});
        p.push_back({"w5", join(k1, Graph::cycle(5)), false});
        return p;
    }();
    return library;
}

const Pattern & pattern(std::string_view name)
{
    for (const auto & p : pattern_library())
        if (p.name == name)
            return p;
    throw std::out_of_range("unknown pattern \"" + std::string(name) + "\"");
}

namespace {
    class InducedMatcher
    {
    public:
        InducedMatcher(const Graph & host, const Graph & p) : host_(host), p_(p), map_(p.order(), -1) {}

        std::optional<Embedding> run()
        {
            if (p_.order() > host_.order())
                return std::nullopt;
            if (extend(0, {}))
                return Embedding{map_};
            return std::nullopt;
        }

    private:
        const Graph & host_;
        const Graph & p_;
        std::vector<int> map_;

        bool extend(int i, VertexSet used)
        {
            if (i == p_.order())
                return true;
            const int pdeg = p_.degree(i);
            const int pnon = p_.order() - 1 - pdeg;
            for (int h : host_.vertices() - used) {
                if (host_.degree(h) < pdeg || host_.order() - 1 - host_.degree(h) < pnon)
                    continue;
                bool consistent = true;
                for (int j = 0 ; j < i && consistent ; ++j)
                    consistent = p_.adjacent(i, j) == host_.adjacent(h, map_[j]);
                if (! consistent)
                    continue;
                map_[i] = h;
                VertexSet next = used;
                next.insert(h);
                if (extend(i + 1, next))
                    return true;
            }
            map_[i] = -1;
            return false;
        }
    };
}

std::optional<Embedding> contains_induced(const Graph & host, const Graph & p)
{
    return InducedMatcher(host, p).run();
}

std::optional<Embedding> contains_induced(const Graph & host, const Pattern & p)
{
    return contains_induced(host, p.graph);
}

bool is_h_free(const Graph & host, const Pattern & p)
{
    return ! contains_induced(host, p).has_value();
}

bool verify_embedding(const Graph & host, const Graph & p, const Embedding & e)
{
    if (static_cast<int>(e.map.size()) != p.order())
        return false;
    VertexSet image;
    for (int h : e.map) {
        if (h < 0 || h >= host.order() || image.contains(h))
            return false;
        image.insert(h);
    }
    for (int i = 0 ; i < p.order() ; ++i)
        for (int j = i + 1 ; j < p.order() ; ++j)
            if (p.adjacent(i, j) != host.adjacent(e.map[i], e.map[j]))
                return false;
    return true;
}

std::optional<std::vector<VertexSet>> odd_cycle_inflation(const Graph & g)
{
    // For cycles of length >= 5 the inflated cliques are exactly the true-twin classes.
    std::map<std::uint64_t, VertexSet> by_closed_nbhd;
    for (int v = 0 ; v < g.order() ; ++v)
        by_closed_nbhd[g.closed_neighbors(v).bits()].insert(v);

    std::vector<VertexSet> classes;
    for (auto & [_, c] : by_closed_nbhd)
        classes.push_back(c);
    std::sort(classes.begin(), classes.end(), [] (VertexSet a, VertexSet b) { return a.first() < b.first(); });

    const int m = static_cast<int>(classes.size());
    if (m < 5 || m % 2 == 0)
        return std::nullopt;

    auto touches = [&] (int a, int b) { return g.adjacent(classes[a].first(), classes[b].first()); };
    std::vector<std::vector<int>> quotient(m);
    for (int a = 0 ; a < m ; ++a)
        for (int b = 0 ; b < m ; ++b)
            if (a != b && touches(a, b))
                quotient[a].push_back(b);
    for (const auto & nbrs : quotient)
        if (nbrs.size() != 2)
            return std::nullopt;

    std::vector<VertexSet> cyclic{classes[0]};
    int prev = 0, cur = quotient[0][0];
    while (cur != 0) {
        cyclic.push_back(classes[cur]);
        int next = quotient[cur][0] == prev ? quotient[cur][1] : quotient[cur][0];
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(cyclic.size()) != m)
        return std::nullopt;
    return cyclic;
}

} // namespace oddminor
