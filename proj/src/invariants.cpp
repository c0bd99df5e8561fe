#include "oddminor/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "oddminor/cliques.hpp"

namespace oddminor {

int independence_number(const Graph & g)
{
    return maximum_independent_set(g).size();
}

int clique_number(const Graph & g)
{
    return maximum_clique(g).size();
}

int min_degree(const Graph & g)
{
    int d = g.order() == 0 ? 0 : g.order();
    for (int v = 0 ; v < g.order() ; ++v)
        d = std::min(d, g.degree(v));
    return d;
}

int max_degree(const Graph & g)
{
    int d = 0;
    for (int v = 0 ; v < g.order() ; ++v)
        d = std::max(d, g.degree(v));
    return d;
}

namespace {
    class Colouring
    {
    public:
        Colouring(const Graph & g, std::vector<int> order) : g_(g), order_(std::move(order)) {}

        bool feasible(int k)
        {
            k_ = k;
            classes_.assign(k, VertexSet{});
            return assign(0, 0);
        }

    private:
        const Graph & g_;
        std::vector<int> order_;
        int k_ = 0;
        std::vector<VertexSet> classes_;

        bool assign(std::size_t i, int used)
        {
            if (i == order_.size())
                return true;
            int v = order_[i];
            // a fresh colour is only ever the next unused one
            int limit = std::min(used + 1, k_);
            for (int c = 0 ; c < limit ; ++c) {
                if (! classes_[c].disjoint_from(g_.neighbors(v)))
                    continue;
                classes_[c].insert(v);
                bool ok = assign(i + 1, std::max(used, c + 1));
                classes_[c].erase(v);
                if (ok)
                    return true;
            }
            return false;
        }
    };
}

int chromatic_number_exact(const Graph & g)
{
    const int n = g.order();
    if (n > chromatic_exact_max_order)
        throw Unsupported("exact chromatic number is limited to " + std::to_string(chromatic_exact_max_order) + " vertices");
    if (n == 0)
        return 0;

    VertexSet clique = maximum_clique(g);
    std::vector<int> order = clique.to_vector();
    std::vector<int> rest = (g.vertices() - clique).to_vector();
    std::stable_sort(rest.begin(), rest.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });
    order.insert(order.end(), rest.begin(), rest.end());

    Colouring c(g, std::move(order));
    for (int k = clique.size() ; k < n ; ++k)
        if (c.feasible(k))
            return k;
    return n;
}

int chromatic_number(const Graph & g)
{
    if (independence_number(g) <= 2)
        return g.order() - max_matching(complement(g));
    return chromatic_number_exact(g);
}

InvariantReport invariant_report(const Graph & g)
{
    InvariantReport r;
    r.n = g.order();
    r.alpha = independence_number(g);
    r.omega = clique_number(g);
    r.max_matching_complement = max_matching(complement(g));
    r.chi = r.alpha <= 2 ? r.n - r.max_matching_complement : chromatic_number_exact(g);
    r.delta = min_degree(g);
    r.Delta = max_degree(g);
    r.kappa = vertex_connectivity(g);
    return r;
}

} // namespace oddminor
