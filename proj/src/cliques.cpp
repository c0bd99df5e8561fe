#include "oddminor/cliques.hpp"

#include <algorithm>

namespace oddminor {

namespace {
    struct MaxCliqueSearch
    {
        const Graph & g;
        VertexSet best;

        // Candidates are tried in ascending order, and only strictly larger cliques replace
        // the incumbent, so the first maximum found is the lexicographically smallest.
        void expand(VertexSet current, VertexSet candidates)
        {
            if (current.size() > best.size())
                best = current;
            while (! candidates.empty()) {
                if (current.size() + candidates.size() <= best.size())
                    return;
                int v = candidates.first();
                candidates.erase(v);
                VertexSet next = current;
                next.insert(v);
                expand(next, candidates & g.neighbors(v));
            }
        }
    };

    void bron_kerbosch(const Graph & g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet> & out)
    {
        if (p.empty()) {
            if (x.empty())
                out.push_back(r);
            return;
        }
        // pivot maximising |P ∩ N(u)|, lowest index on ties
        int pivot = -1, best = -1;
        for (int u : p | x) {
            int c = (p & g.neighbors(u)).size();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        for (int v : p - g.neighbors(pivot)) {
            VertexSet r2 = r;
            r2.insert(v);
            bron_kerbosch(g, r2, p & g.neighbors(v), x & g.neighbors(v), out);
            p.erase(v);
            x.insert(v);
        }
    }

    void extend_cliques(const Graph & g, VertexSet current, VertexSet candidates, std::vector<VertexSet> & out)
    {
        for (int v : candidates) {
            VertexSet next = current;
            next.insert(v);
            out.push_back(next);
            VertexSet higher = VertexSet::from_bits(candidates.bits() & ~((std::uint64_t{2} << v) - 1));
            extend_cliques(g, next, higher & g.neighbors(v), out);
        }
    }
}

VertexSet maximum_clique(const Graph & g)
{
    MaxCliqueSearch s{g, {}};
    s.expand({}, g.vertices());
    return s.best;
}

VertexSet maximum_independent_set(const Graph & g)
{
    return maximum_clique(complement(g));
}

std::vector<VertexSet> maximal_cliques(const Graph & g)
{
    std::vector<VertexSet> out;
    if (g.order() == 0)
        return out;
    bron_kerbosch(g, {}, g.vertices(), {}, out);
    std::sort(out.begin(), out.end(), [] (VertexSet a, VertexSet b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return lex_less(a, b);
    });
    return out;
}

std::vector<VertexSet> all_cliques(const Graph & g)
{
    std::vector<VertexSet> out;
    extend_cliques(g, {}, g.vertices(), out);
    return out;
}

} // namespace oddminor
