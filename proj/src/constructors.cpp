#include "oddminor/constructors.hpp"

#include <algorithm>

#include "oddminor/cliques.hpp"
#include "oddminor/invariants.hpp"

namespace oddminor {

int ConstructionTrace::total_gained() const
{
    int sum = 0;
    for (const auto & s : steps)
        sum += s.gained;
    return sum;
}

bool ConstructionTrace::used(const std::string & strategy) const
{
    return std::any_of(steps.begin(), steps.end(), [&] (const TraceStep & s) { return s.strategy == strategy; });
}

namespace {
    std::optional<Edge> lowest_monochromatic_edge(const Graph & g, const std::vector<int> & a, const std::vector<int> & b,
            const std::map<int, int> & colors)
    {
        for (int u : a)
            for (int v : b)
                if (g.adjacent(u, v) && colors.at(u) == colors.at(v))
                    return Edge{u, v};
        return std::nullopt;
    }

    void append_lifted(ConstructionTrace & into, const ConstructionTrace & from, const std::vector<int> & to_host)
    {
        for (const auto & s : from.steps) {
            TraceStep lifted{s.strategy, {}, s.gained};
            for (int v : s.consumed)
                lifted.consumed.push_back(to_host.at(v));
            into.steps.push_back(std::move(lifted));
        }
    }

    void require_alpha_two(const Graph & g)
    {
        if (independence_number(g) > 2)
            throw PreconditionFailed("the construction needs independence number at most two");
    }

    // Cyclic or path order of a complement component whose vertices all have degree <= 2.
    std::vector<int> walk_component(const Graph & h, VertexSet comp)
    {
        int start = comp.first();
        for (int v : comp)
            if (h.degree(v) < 2) {
                start = v;
                break;
            }
        std::vector<int> order{start};
        int prev = -1, cur = start;
        for (;;) {
            int next = -1;
            for (int u : h.neighbors(cur))
                if (u != prev && u != start) {
                    next = u;
                    break;
                }
            if (next == -1 || std::find(order.begin(), order.end(), next) != order.end())
                break;
            order.push_back(next);
            prev = cur;
            cur = next;
        }
        return order;
    }
}

OddExpansionCertificate certify_clique_plus_seagulls(const Graph & g, VertexSet k, const SeagullPacking & p)
{
    g.check_subset(k);
    require_alpha_two(g);
    if (! g.is_clique(k))
        throw PreconditionFailed("K is not a clique");
    if (! verify_packing(g, p))
        throw PreconditionFailed("the seagulls are not a disjoint packing of induced paths");
    if (! p.support().disjoint_from(k))
        throw PreconditionFailed("the seagulls meet the clique");

    std::vector<VertexSet> branches;
    std::map<int, int> colors;
    for (int v : k) {
        branches.push_back(VertexSet::singleton(v));
        colors[v] = 0;
    }
    for (const auto & s : p.seagulls) {
        branches.push_back(s.support());
        colors[s.wing1] = 0;
        colors[s.wing2] = 0;
        colors[s.center] = 1;
    }
    auto c = assemble_certificate(g, branches, colors);
    if (! c)
        throw std::logic_error("clique plus seagulls failed to connect although alpha <= 2");
    return *c;
}

Certified certify_min_degree(const Graph & g)
{
    const int n = g.order();
    if (n > 0 && min_degree(g) < n - 3)
        throw PreconditionFailed("minimum degree is below n - 3");

    const Graph h = complement(g);
    std::vector<std::vector<int>> odd_cycles;
    VertexSet rest = g.vertices();
    for (VertexSet comp : components(h)) {
        bool cycle = comp.size() >= 5 && comp.size() % 2 == 1;
        for (int v : comp)
            cycle = cycle && h.degree(v) == 2;
        if (cycle) {
            odd_cycles.push_back(walk_component(h, comp));
            rest -= comp;
        }
    }
    std::stable_sort(odd_cycles.begin(), odd_cycles.end(), [] (const auto & a, const auto & b) {
        return a.size() > b.size();
    });

    Certified out;
    std::vector<VertexSet> branches;
    std::map<int, int> colors;
    for (const auto & a : odd_cycles) {
        // a[0..2k] is a_1..a_{2k+1}
        const int k = static_cast<int>(a.size() - 1) / 2;
        for (int i = 0 ; i < k ; ++i) {
            branches.push_back(VertexSet::singleton(a[2 * i]));
            colors[a[2 * i]] = 0;
        }
        const int centre = a[1], w1 = a[2 * k - 1], w2 = a[2 * k];
        branches.push_back(VertexSet{centre, w1, w2});
        colors[centre] = 1;
        colors[w1] = 0;
        colors[w2] = 0;
        out.trace.steps.push_back({"min-degree", a, k + 1});
    }

    TraceStep base{"min-degree", rest.to_vector(), 0};
    for (VertexSet comp : components(induced(h, rest))) {
        std::vector<int> local = walk_component(induced(h, rest), comp);
        const auto members = rest.to_vector();
        // alternate along the path or cycle; a cycle of length m keeps floor(m/2)
        bool closed = local.size() >= 3 && induced(h, rest).adjacent(local.front(), local.back());
        std::size_t keep = closed ? local.size() / 2 : (local.size() + 1) / 2;
        for (std::size_t i = 0 ; i < keep ; ++i) {
            int v = members[local[2 * i]];
            branches.push_back(VertexSet::singleton(v));
            colors[v] = 0;
            ++base.gained;
        }
    }
    out.trace.steps.push_back(std::move(base));

    auto c = assemble_certificate(g, branches, colors);
    if (! c)
        throw std::logic_error("min-degree construction failed to connect");
    out.certificate = std::move(*c);
    return out;
}

std::optional<std::pair<int, int>> reduce_dominated_pair(const Graph & g)
{
    for (int x = 0 ; x < g.order() ; ++x)
        for (int y = 0 ; y < g.order() ; ++y)
            if (x != y && ! g.adjacent(x, y) && g.neighbors(x).subset_of(g.neighbors(y)))
                return std::pair{x, y};
    return std::nullopt;
}

OddExpansionCertificate compose_join(const Graph & g, VertexSet part1, VertexSet part2,
        const OddExpansionCertificate & c1, const OddExpansionCertificate & c2)
{
    g.check_subset(part1 | part2);
    if (! part1.disjoint_from(part2))
        throw PreconditionFailed("join parts overlap");
    for (int v : part1)
        if (! part2.subset_of(g.neighbors(v)))
            throw PreconditionFailed("join parts are not complete to each other");
    if (auto bad = verify_certificate(induced(g, part1), c1))
        throw PreconditionFailed("first sub-certificate fails verification: " + bad->detail);
    if (auto bad = verify_certificate(induced(g, part2), c2))
        throw PreconditionFailed("second sub-certificate fails verification: " + bad->detail);

    auto normalised = [] (const OddExpansionCertificate & c) {
        return singleton_color(c) == 1 ? flipped(c) : c;
    };
    OddExpansionCertificate a = relabeled(normalised(c1), part1.to_vector());
    OddExpansionCertificate b = relabeled(normalised(c2), part2.to_vector());

    OddExpansionCertificate out = a;
    out.t = a.t + b.t;
    out.branches.insert(out.branches.end(), b.branches.begin(), b.branches.end());
    out.colors.insert(b.colors.begin(), b.colors.end());
    for (const auto & conn : b.connections)
        out.connections.push_back({conn.branch_a + a.t, conn.branch_b + a.t, conn.edge});
    for (int i = 0 ; i < a.t ; ++i)
        for (int j = 0 ; j < b.t ; ++j) {
            auto e = lowest_monochromatic_edge(g, a.branches[i].vertices, b.branches[j].vertices, out.colors);
            if (! e)
                throw std::logic_error("join composition found no monochromatic cross edge");
            out.connections.push_back({i, a.t + j, *e});
        }
    std::sort(out.connections.begin(), out.connections.end(), [] (const Connection & x, const Connection & y) {
        return std::pair{x.branch_a, x.branch_b} < std::pair{y.branch_a, y.branch_b};
    });
    return out;
}

namespace {
    struct AutoContext
    {
        SearchBudget & budget;
        bool allow_search;
    };

    std::optional<Certified> auto_impl(const Graph & g, int target, AutoContext & ctx);

    std::optional<Certified> by_dominated_pair(const Graph & g, int target, AutoContext & ctx)
    {
        auto pair = reduce_dominated_pair(g);
        if (! pair)
            return std::nullopt;
        auto [x, y] = *pair;
        VertexSet rest = g.vertices() - VertexSet{x, y};
        auto sub = auto_impl(induced(g, rest), target - 1, ctx);
        if (! sub)
            return std::nullopt;

        // y is adjacent to everything except x, so {y} + rest is a join inside g
        OddExpansionCertificate single = clique_certificate(Graph::complete(1), VertexSet{0});
        Certified out;
        out.certificate = compose_join(g, VertexSet{y}, rest, single, sub->certificate);
        out.trace.steps.push_back({"dominated-pair", {x, y}, 1});
        append_lifted(out.trace, sub->trace, rest.to_vector());
        return out;
    }

    std::optional<Certified> by_join(const Graph & g, int target, AutoContext & ctx)
    {
        auto parts = components(complement(g));
        if (parts.size() < 2)
            return std::nullopt;
        VertexSet p1 = parts.front(), p2 = g.vertices() - p1;
        const int n1 = p1.size(), n2 = p2.size();
        int t1 = (n1 + 1) / 2;
        int t2 = std::max((n2 + 1) / 2, target - t1);
        if (t2 > n2) {
            t2 = n2;
            t1 = target - n2;
        }
        if (t1 > n1)
            return std::nullopt;
        auto c1 = auto_impl(induced(g, p1), t1, ctx);
        if (! c1)
            return std::nullopt;
        auto c2 = auto_impl(induced(g, p2), t2, ctx);
        if (! c2)
            return std::nullopt;

        Certified out;
        out.certificate = compose_join(g, p1, p2, c1->certificate, c2->certificate);
        out.trace.steps.push_back({"join", {}, 0});
        append_lifted(out.trace, c1->trace, p1.to_vector());
        append_lifted(out.trace, c2->trace, p2.to_vector());
        return out;
    }

    std::optional<Certified> by_min_degree(const Graph & g, int target)
    {
        if (g.order() > 0 && min_degree(g) < g.order() - 3)
            return std::nullopt;
        Certified c = certify_min_degree(g);
        if (c.certificate.t < target)
            return std::nullopt;
        return c;
    }

    std::optional<Certified> auto_impl(const Graph & g, int target, AutoContext & ctx)
    {
        if (target <= 0)
            return Certified{};
        if (target > g.order())
            return std::nullopt;
        if (auto c = by_dominated_pair(g, target, ctx))
            return c;
        if (auto c = by_join(g, target, ctx))
            return c;
        if (auto c = by_min_degree(g, target))
            return c;
        if (auto c = certify_by_clique_seagulls(g, target))
            return c;
        if (ctx.allow_search)
            return certify_by_search(g, target, ctx.budget);
        return std::nullopt;
    }
}

std::optional<Certified> certify_by_clique_seagulls(const Graph & g, int target)
{
    if (target <= 0)
        return Certified{};
    for (VertexSet k : maximal_cliques(g)) {
        Certified out;
        if (k.size() >= target) {
            out.certificate = clique_certificate(g, k);
            out.trace.steps.push_back({"clique-seagulls", k.to_vector(), k.size()});
            return out;
        }
        const int need = target - k.size();
        const VertexSet rest = g.vertices() - k;
        if (rest.size() < 3 * need || rest.size() > packing_max_order)
            continue;
        auto packing = max_seagull_packing(induced(g, rest), need);
        if (! packing)
            continue;
        const auto to_host = rest.to_vector();
        for (auto & s : packing->seagulls)
            s = Seagull{to_host[s.wing1], to_host[s.center], to_host[s.wing2]};
        out.certificate = certify_clique_plus_seagulls(g, k, *packing);
        out.trace.steps.push_back({"clique-seagulls", (k | packing->support()).to_vector(), out.certificate.t});
        return out;
    }
    return std::nullopt;
}

std::optional<Certified> certify_by_join(const Graph & g, int target, const AutoCertifyOptions & options)
{
    SearchBudget local;
    AutoContext ctx{options.budget ? *options.budget : local, options.allow_search};
    return by_join(g, target, ctx);
}

std::optional<Certified> certify_by_search(const Graph & g, int target, SearchBudget & budget)
{
    auto c = has_odd_clique_expansion(g, target, budget);
    if (! c)
        return std::nullopt;
    Certified out;
    out.certificate = std::move(*c);
    std::vector<int> consumed;
    for (auto [v, _] : out.certificate.colors)
        consumed.push_back(v);
    out.trace.steps.push_back({"search", std::move(consumed), out.certificate.t});
    return out;
}

std::optional<Certified> auto_certify(const Graph & g, int target, const AutoCertifyOptions & options)
{
    require_alpha_two(g);
    SearchBudget local;
    AutoContext ctx{options.budget ? *options.budget : local, options.allow_search};
    auto result = auto_impl(g, target, ctx);
    if (! result) {
        if (options.allow_search)
            throw Exhausted("no odd clique expansion of order " + std::to_string(target)
                    + " exists; every strategy failed and exhaustive search confirmed absence");
        return std::nullopt;
    }
    if (auto bad = verify_certificate(g, result->certificate))
        throw std::logic_error(std::string("auto_certify produced an invalid certificate: ") + bad->detail);
    return result;
}

} // namespace oddminor
