#include <doctest.h>

#include <random>

#include "oddminor/cliques.hpp"
#include "oddminor/constructors.hpp"
#include "oddminor/harness.hpp"
#include "oddminor/invariants.hpp"
#include "oracles.hpp"

using namespace oddminor;

namespace {
    int ceil_div(int a, int b) { return (a + b - 1) / b; }
}

TEST_CASE("clique plus seagulls")
{
    Graph cc7 = complement(Graph::cycle(7));
    OddExpansionCertificate c = certify_clique_plus_seagulls(cc7, VertexSet{0, 2, 4}, SeagullPacking{{{5, 3, 6}}});
    CHECK(c.t == 4);
    CHECK_FALSE(verify_certificate(cc7, c));
    CHECK(c.colors.at(3) == 1);
    CHECK(c.colors.at(5) == 0);

    Graph k6 = Graph::complete(6);
    CHECK(certify_clique_plus_seagulls(k6, k6.vertices(), {}).t == 6);

    Graph c5 = Graph::cycle(5);
    OddExpansionCertificate one = certify_clique_plus_seagulls(c5, {}, SeagullPacking{{{0, 1, 2}}});
    CHECK(one.t == 1);
    CHECK(one.connections.empty());

    CHECK_THROWS_AS(certify_clique_plus_seagulls(Graph::cycle(7), VertexSet{0}, {}), PreconditionFailed);
    CHECK_THROWS_AS(certify_clique_plus_seagulls(cc7, VertexSet{0, 1}, {}), PreconditionFailed);
    CHECK_THROWS_AS(certify_clique_plus_seagulls(cc7, VertexSet{0, 3}, SeagullPacking{{{5, 3, 6}}}), PreconditionFailed);
}

TEST_CASE("min-degree recursion examples")
{
    Certified c7 = certify_min_degree(complement(Graph::cycle(7)));
    CHECK(c7.certificate.t == 4);
    CHECK_FALSE(verify_certificate(complement(Graph::cycle(7)), c7.certificate));
    CHECK(c7.trace.total_gained() == 4);

    Certified c9 = certify_min_degree(complement(Graph::cycle(9)));
    CHECK(c9.certificate.t == 5);
    CHECK_FALSE(verify_certificate(complement(Graph::cycle(9)), c9.certificate));

    Certified k5 = certify_min_degree(Graph::complete(5));
    CHECK(k5.certificate.t == 5);

    CHECK_THROWS_AS(certify_min_degree(Graph::cycle(6)), PreconditionFailed);
}

TEST_CASE("min-degree bound on every graph with delta >= n - 3, n <= 9")
{
    for (int n = 1 ; n <= 9 ; ++n)
        for (const Graph & g : enumerate_min_degree(n)) {
            REQUIRE(min_degree(g) >= n - 3);
            Certified c = certify_min_degree(g);
            CHECK_FALSE(verify_certificate(g, c.certificate));
            CHECK(c.certificate.t >= ceil_div(n, independence_number(g)));
            CHECK(c.trace.total_gained() == c.certificate.t);
        }
}

TEST_CASE("dominated pairs")
{
    auto p3 = reduce_dominated_pair(Graph::path(3));
    REQUIRE(p3);
    CHECK(p3->first == 0);
    CHECK(p3->second == 2);
    CHECK_FALSE(reduce_dominated_pair(Graph::complete(5)));
    CHECK_FALSE(reduce_dominated_pair(Graph::cycle(5)));

    std::mt19937_64 rng(47);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        Graph g = oracle::random_alpha2(rng, 2 + trial % 10, 0.5);
        if (auto pair = reduce_dominated_pair(g)) {
            auto [x, y] = *pair;
            CHECK_FALSE(g.adjacent(x, y));
            // with alpha <= 2, y sees everything but x
            CHECK(g.neighbors(y) == g.vertices() - VertexSet{x, y});
        }
    }
}

TEST_CASE("join composition")
{
    Graph c5 = Graph::cycle(5);
    Graph g = join(c5, c5);
    OhResult r = odd_hadwiger_number(c5);
    REQUIRE(r.value == 3);
    OddExpansionCertificate c = compose_join(g, VertexSet::range(5), VertexSet::range(10) - VertexSet::range(5),
            r.certificate, r.certificate);
    CHECK(c.t == 6);
    CHECK_FALSE(verify_certificate(g, c));

    // flipping either side does not change the result
    OddExpansionCertificate f = compose_join(g, VertexSet::range(5), VertexSet::range(10) - VertexSet::range(5),
            flipped(r.certificate), r.certificate);
    CHECK(f == c);

    Graph k1c5 = join(Graph(1), c5);
    OddExpansionCertificate apex = compose_join(k1c5, VertexSet{0}, k1c5.vertices() - VertexSet{0},
            clique_certificate(Graph(1), VertexSet{0}), r.certificate);
    CHECK(apex.t == 4);
    CHECK_FALSE(verify_certificate(k1c5, apex));

    CHECK_THROWS_AS(compose_join(disjoint_union(c5, c5), VertexSet::range(5),
            VertexSet::range(10) - VertexSet::range(5), r.certificate, r.certificate), PreconditionFailed);
    OddExpansionCertificate broken = r.certificate;
    broken.colors.begin()->second ^= 1;
    if (verify_certificate(c5, broken))
        CHECK_THROWS_AS(compose_join(g, VertexSet::range(5), VertexSet::range(10) - VertexSet::range(5), broken,
                r.certificate), PreconditionFailed);
}

TEST_CASE("auto certify examples and trace")
{
    auto cc7 = auto_certify(complement(Graph::cycle(7)), 4);
    REQUIRE(cc7);
    CHECK(cc7->certificate.t >= 4);
    CHECK(cc7->trace.total_gained() == cc7->certificate.t);

    Graph k1c5 = join(Graph(1), Graph::cycle(5));
    auto w = auto_certify(k1c5, 3);
    REQUIRE(w);
    CHECK(w->certificate.t >= 3);
    CHECK_FALSE(verify_certificate(k1c5, w->certificate));

    auto k7 = auto_certify(Graph::complete(7), 7);
    REQUIRE(k7);
    CHECK(k7->certificate.t == 7);
    // the complement of K7 is edgeless, so the join split fires first
    CHECK(k7->trace.steps.front().strategy == "join");
    auto direct = certify_by_clique_seagulls(Graph::complete(7), 7);
    REQUIRE(direct);
    CHECK(direct->trace.steps.front().strategy == "clique-seagulls");

    CHECK_THROWS_AS(auto_certify(Graph::complete(3), 4), Exhausted);
    AutoCertifyOptions no_search;
    no_search.allow_search = false;
    CHECK_FALSE(auto_certify(Graph::complete(3), 4, no_search));
    CHECK_THROWS_AS(auto_certify(Graph::cycle(7), 2), PreconditionFailed);

    SearchBudget budget;
    auto single = certify_by_search(Graph::complete(1), 1, budget);
    REQUIRE(single);
    CHECK(single->trace.steps.front().strategy == "search");
    SearchBudget tiny;
    tiny.limit = 100;
    CHECK_THROWS_AS(certify_by_search(complement(Graph::cycle(9)), 6, tiny), SearchTimeout);

    auto join_only = certify_by_join(join(Graph::cycle(5), Graph::cycle(5)), 6);
    REQUIRE(join_only);
    CHECK(join_only->trace.steps.front().strategy == "join");
    CHECK_FALSE(certify_by_join(Graph::cycle(5), 3));
}

TEST_CASE("every strategy output verifies on random alpha <= 2 graphs")
{
    std::mt19937_64 rng(53);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        Graph g = oracle::random_alpha2(rng, 1 + trial % 12, 0.3 + 0.5 * (trial % 3) / 2.0);
        const int target = (g.order() + 1) / 2;
        auto a = auto_certify(g, target);
        REQUIRE(a);
        CHECK_FALSE(verify_certificate(g, a->certificate));
        CHECK(a->trace.total_gained() == a->certificate.t);
        CHECK(a->certificate.t >= target);
        if (auto c = certify_by_clique_seagulls(g, target)) {
            CHECK_FALSE(verify_certificate(g, c->certificate));
            CHECK(c->certificate.t >= target);
        }
        if (auto c = certify_by_join(g, target)) {
            CHECK_FALSE(verify_certificate(g, c->certificate));
            CHECK(c->certificate.t >= target);
        }
        if (g.order() > 0 && min_degree(g) >= g.order() - 3)
            CHECK_FALSE(verify_certificate(g, certify_min_degree(g).certificate));
    }
}
