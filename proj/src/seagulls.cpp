#include "oddminor/seagulls.hpp"

#include "oddminor/canonical.hpp"
#include "oddminor/cliques.hpp"
#include "oddminor/hfree.hpp"
#include "oddminor/invariants.hpp"

namespace oddminor {

bool is_seagull(const Graph & g, const Seagull & s)
{
    auto in_range = [&] (int v) { return v >= 0 && v < g.order(); };
    if (! in_range(s.wing1) || ! in_range(s.center) || ! in_range(s.wing2))
        return false;
    if (s.wing1 == s.center || s.wing2 == s.center || s.wing1 == s.wing2)
        return false;
    return g.adjacent(s.wing1, s.center) && g.adjacent(s.center, s.wing2) && ! g.adjacent(s.wing1, s.wing2);
}

VertexSet SeagullPacking::support() const
{
    VertexSet s;
    for (const auto & gull : seagulls)
        s |= gull.support();
    return s;
}

bool verify_packing(const Graph & g, const SeagullPacking & p)
{
    VertexSet used;
    for (const auto & s : p.seagulls) {
        if (! is_seagull(g, s) || ! s.support().disjoint_from(used))
            return false;
        used |= s.support();
    }
    return true;
}

std::vector<Seagull> enumerate_seagulls(const Graph & g)
{
    std::vector<Seagull> out;
    for (int c = 0 ; c < g.order() ; ++c) {
        VertexSet nbrs = g.neighbors(c);
        for (int a : nbrs)
            for (int b : nbrs - g.neighbors(a))
                if (a < b)
                    out.push_back({a, c, b});
    }
    return out;
}

VertexSet boundary(const Graph & g, VertexSet k)
{
    g.check_subset(k);
    if (k.empty() || ! g.is_clique(k))
        throw NotAClique("boundary needs a nonempty clique");
    VertexSet mixed;
    for (int v : g.vertices() - k) {
        int hits = (g.neighbors(v) & k).size();
        if (hits > 0 && hits < k.size())
            mixed.insert(v);
    }
    return mixed;
}

HalfInteger capacity(const Graph & g, VertexSet k)
{
    return HalfInteger{g.order() + boundary(g, k).size() - k.size()};
}

namespace {
    class PackingSearch
    {
    public:
        PackingSearch(const Graph & g, int ell) : g_(g), ell_(ell)
        {
            by_vertex_.resize(g.order());
            for (const auto & s : enumerate_seagulls(g))
                for (int v : s.support())
                    by_vertex_[v].push_back(s);
        }

        std::optional<SeagullPacking> run()
        {
            if (search(g_.vertices()))
                return SeagullPacking{chosen_};
            return std::nullopt;
        }

    private:
        const Graph & g_;
        int ell_;
        std::vector<std::vector<Seagull>> by_vertex_;
        std::vector<Seagull> chosen_;

        bool search(VertexSet available)
        {
            int need = ell_ - static_cast<int>(chosen_.size());
            if (need == 0)
                return true;
            if (available.size() < 3 * need)
                return false;
            int v = available.first();
            for (const auto & s : by_vertex_[v]) {
                if (! s.support().subset_of(available))
                    continue;
                chosen_.push_back(s);
                if (search(available - s.support()))
                    return true;
                chosen_.pop_back();
            }
            return search(available - VertexSet::singleton(v));
        }
    };
}

std::optional<SeagullPacking> max_seagull_packing(const Graph & g, int ell)
{
    if (ell < 0)
        throw PreconditionFailed("seagull count must be nonnegative");
    if (g.order() > packing_max_order)
        throw Unsupported("exact seagull packing is limited to " + std::to_string(packing_max_order) + " vertices");
    return PackingSearch(g, ell).run();
}

namespace {
    bool is_k1_plus_c5(const Graph & g)
    {
        static const CanonicalLabel w5 = canonical_label(pattern("w5").graph);
        return g.order() == 6 && g.size() == 10 && canonical_label(g) == w5;
    }
}

ConditionReport cs_conditions(const Graph & g, int ell)
{
    if (ell < 0)
        throw PreconditionFailed("seagull count must be nonnegative");

    ConditionReport r;
    r.ell = ell;
    r.cond_order = g.order() >= 3 * ell;

    if (ell == 0)
        r.cond_connectivity = true;
    else {
        VertexSet cut = minimum_vertex_cut(g);
        int kappa = vertex_connectivity(g);
        r.cond_connectivity = kappa >= ell;
        if (! r.cond_connectivity)
            r.violating_cut = cut;
    }

    r.cond_capacity = true;
    for (VertexSet k : all_cliques(g))
        if (capacity(g, k).twice < 2 * ell) {
            r.cond_capacity = false;
            r.violating_clique = k;
            break;
        }

    r.cond_antimatching = max_matching(complement(g)) >= ell;
    r.exceptional = ell == 2 && is_k1_plus_c5(g);
    return r;
}

bool capacity_condition_maximal_only(const Graph & g, int ell)
{
    for (VertexSet k : maximal_cliques(g))
        if (capacity(g, k).twice < 2 * ell)
            return false;
    return true;
}

SeagullHypothesis seagulls2_hypothesis(const Graph & g)
{
    const int n = g.order();
    const int half = (n + 1) / 2;
    SeagullHypothesis h;
    if (vertex_connectivity(g) < half) {
        h.reason = HypothesisReason::NotConnectedEnough;
        return h;
    }
    VertexSet k = maximum_clique(g);
    // doubled: 3*ceil(n/2) - n <= 2|K| <= 2*ceil(n/2)
    if (3 * half - n > 2 * k.size() || k.size() > half) {
        h.reason = HypothesisReason::CliqueOutsideWindow;
        return h;
    }
    h.clique = k;
    h.needed = half - k.size();
    return h;
}

} // namespace oddminor
