#include "oddminor/expansion.hpp"

#include "oddminor/cliques.hpp"
#include "oddminor/constructors.hpp"
#include "oddminor/invariants.hpp"

namespace oddminor {

OhResult odd_hadwiger_number(const Graph & g, SearchBudget & budget)
{
    if (g.order() > expansion_search_max_order)
        throw Unsupported("exact odd Hadwiger number is limited to " + std::to_string(expansion_search_max_order)
                + " vertices");
    OhResult best{0, {}};
    if (g.order() == 0)
        return best;
    VertexSet k = maximum_clique(g);
    best = {k.size(), clique_certificate(g, k)};

    if (independence_number(g) <= 2) {
        AutoCertifyOptions options;
        options.allow_search = false;
        if (auto c = auto_certify(g, (g.order() + 1) / 2, options); c && c->certificate.t > best.value)
            best = {c->certificate.t, c->certificate};
    }

    // singleton branches form a clique, so t <= (n + omega) / 2
    const int ceiling = (g.order() + clique_number(g)) / 2;
    while (best.value < ceiling) {
        auto c = has_odd_clique_expansion(g, best.value + 1, budget);
        if (! c)
            break;
        best = {c->t, std::move(*c)};
    }
    return best;
}

OhResult odd_hadwiger_number(const Graph & g)
{
    SearchBudget budget;
    return odd_hadwiger_number(g, budget);
}

} // namespace oddminor
