#include <doctest.h>

#include <random>

#include "oddminor/canonical.hpp"
#include "oddminor/cliques.hpp"
#include "oddminor/invariants.hpp"
#include "oddminor/seagulls.hpp"
#include "oracles.hpp"

using namespace oddminor;

namespace {
    Graph w5() { return join(Graph(1), Graph::cycle(5)); }
}

TEST_CASE("seagull enumeration")
{
    CHECK(enumerate_seagulls(Graph::complete(5)).empty());
    CHECK(enumerate_seagulls(Graph::path(3)) == std::vector<Seagull>{{0, 1, 2}});
    auto c5 = enumerate_seagulls(Graph::cycle(5));
    CHECK(c5.size() == 5);
    for (std::size_t i = 0 ; i < c5.size() ; ++i)
        CHECK(c5[i].center == static_cast<int>(i));
    CHECK(is_seagull(Graph::cycle(5), {1, 0, 4}));
    CHECK_FALSE(is_seagull(Graph::complete(3), {0, 1, 2}));
}

TEST_CASE("boundary and capacity")
{
    Graph k5 = Graph::complete(5);
    CHECK(boundary(k5, k5.vertices()).empty());
    CHECK(capacity(k5, k5.vertices()).twice == 0);
    // apex 0, cycle 1..5; {0, 1, 2} is a triangle
    CHECK(boundary(w5(), VertexSet{0, 1, 2}) == VertexSet{3, 4, 5});
    CHECK(capacity(w5(), VertexSet{0, 1, 2}).twice == 6);
    CHECK(capacity(w5(), VertexSet{0, 1, 2}).value() == 3.0);
    CHECK(boundary(Graph::cycle(5), VertexSet{2}).empty());
    CHECK(capacity(Graph::cycle(5), VertexSet{2}).twice == 4);
    CHECK_THROWS_AS(boundary(Graph::cycle(5), VertexSet{}), NotAClique);
    CHECK_THROWS_AS(boundary(Graph::cycle(5), VertexSet{0, 2}), NotAClique);
}

TEST_CASE("seagull packing examples")
{
    auto empty = max_seagull_packing(Graph::cycle(5), 0);
    REQUIRE(empty);
    CHECK(empty->seagulls.empty());
    CHECK_FALSE(max_seagull_packing(w5(), 2));
    CHECK(max_seagull_packing(w5(), 1));
    Graph cc7 = complement(Graph::cycle(7));
    auto one = max_seagull_packing(induced(cc7, VertexSet{1, 3, 5, 6}), 1);
    REQUIRE(one);
    CHECK(verify_packing(induced(cc7, VertexSet{1, 3, 5, 6}), *one));
    CHECK_THROWS_AS(max_seagull_packing(Graph(21), 1), Unsupported);
    CHECK_THROWS_AS(max_seagull_packing(Graph(3), -1), PreconditionFailed);
    CHECK_FALSE(verify_packing(Graph::cycle(6), SeagullPacking{{{0, 1, 2}, {2, 3, 4}}}));
    CHECK(verify_packing(Graph::cycle(6), SeagullPacking{{{0, 1, 2}, {3, 4, 5}}}));
}

TEST_CASE("seagull packing agrees with brute force")
{
    std::mt19937_64 rng(31);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        Graph g = trial % 2 ? oracle::random_alpha2(rng, 3 + trial % 8, 0.5)
                            : oracle::random_graph(rng, 3 + trial % 8, 0.5);
        for (int ell = 0 ; ell <= 3 ; ++ell) {
            auto p = max_seagull_packing(g, ell);
            CHECK(p.has_value() == oracle::seagull_packing(g, ell));
            if (p) {
                CHECK(static_cast<int>(p->seagulls.size()) == ell);
                CHECK(verify_packing(g, *p));
            }
        }
    }
}

TEST_CASE("packing conditions")
{
    ConditionReport r = cs_conditions(w5(), 2);
    CHECK(r.cond_order);
    CHECK(r.cond_connectivity);
    CHECK(r.cond_capacity);
    CHECK(r.cond_antimatching);
    CHECK(r.exceptional);
    CHECK(r.all_hold());

    ConditionReport k6 = cs_conditions(Graph::complete(6), 1);
    CHECK_FALSE(k6.cond_antimatching);

    ConditionReport small = cs_conditions(Graph::cycle(5), 2);
    CHECK_FALSE(small.cond_order);

    ConditionReport cut = cs_conditions(disjoint_union(Graph::complete(3), Graph::complete(3)), 1);
    CHECK_FALSE(cut.cond_connectivity);
    REQUIRE(cut.violating_cut);
    CHECK(cut.violating_cut->empty());

    ConditionReport cap = cs_conditions(Graph::complete(5), 1);
    CHECK_FALSE(cap.cond_capacity);
    REQUIRE(cap.violating_clique);
    CHECK(capacity(Graph::complete(5), *cap.violating_clique).twice < 2);
}

TEST_CASE("conditions characterise packings on random alpha <= 2 graphs")
{
    const CanonicalLabel exceptional = canonical_label(w5());
    std::mt19937_64 rng(37);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        Graph g = oracle::random_alpha2(rng, 3 + trial % 10, 0.3 + 0.4 * (trial % 2));
        for (int ell = 0 ; ell <= 3 ; ++ell) {
            ConditionReport r = cs_conditions(g, ell);
            bool packs = max_seagull_packing(g, ell).has_value();
            bool exception = ell == 2 && canonical_label(g) == exceptional;
            CHECK(r.exceptional == exception);
            if (! exception)
                CHECK(r.all_hold() == packs);
            CHECK(r.cond_order == (g.order() >= 3 * ell));
            CHECK(r.cond_antimatching == (max_matching(complement(g)) >= ell));
            // maximal cliques alone can miss a low-capacity subclique
            if (r.cond_capacity)
                CHECK(capacity_condition_maximal_only(g, ell));
        }
    }
}

TEST_CASE("seagull hypothesis window")
{
    SeagullHypothesis cc7 = seagulls2_hypothesis(complement(Graph::cycle(7)));
    CHECK(cc7.reason == HypothesisReason::Holds);
    REQUIRE(cc7.clique);
    CHECK(cc7.clique->size() == 3);
    CHECK(cc7.needed == 1);
    CHECK(seagulls2_hypothesis(Graph::complete(7)).reason == HypothesisReason::CliqueOutsideWindow);
    CHECK(seagulls2_hypothesis(disjoint_union(Graph::complete(3), Graph::complete(3))).reason
            == HypothesisReason::NotConnectedEnough);
}
