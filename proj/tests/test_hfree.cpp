#include <doctest.h>

#include <random>

#include "oddminor/hfree.hpp"
#include "oddminor/invariants.hpp"
#include "oracles.hpp"

using namespace oddminor;

TEST_CASE("pattern library")
{
    CHECK(kite().order() == 5);
    CHECK(kite().size() == 6);
    CHECK(pattern("k7minus").graph.size() == 20);
    CHECK(pattern("k7").graph.size() == 21);
    CHECK(pattern("k1p4").graph == join(Graph(1), Graph::path(4)));
    int theorem = 0;
    for (const Pattern & p : pattern_library())
        if (p.theorem_pattern) {
            ++theorem;
            CHECK(independence_number(p.graph) <= 2);
        }
    CHECK(theorem == 6);
    CHECK_THROWS_AS(pattern("petersen"), std::out_of_range);
    // K4 minus an edge plus a pendant at a degree-two vertex
    Graph k4minus = complement(disjoint_union(Graph::complete(2), Graph(2)));
    CHECK(contains_induced(kite(), k4minus));
    int pendant = 0;
    for (int v = 0 ; v < 5 ; ++v)
        pendant += kite().degree(v) == 1;
    CHECK(pendant == 1);
}

TEST_CASE("induced containment examples")
{
    Graph c5 = Graph::cycle(5);
    Graph w5 = join(Graph(1), c5);
    CHECK_FALSE(contains_induced(c5, pattern("k1p4")));
    CHECK_FALSE(contains_induced(w5, kite()));
    CHECK_FALSE(is_h_free(Graph::complete(7), pattern("k7")));
    CHECK(is_h_free(complement(Graph::cycle(7)), pattern("k7minus")));
    CHECK(is_h_free(w5, pattern("c4")) == ! oracle::induced_subgraph(w5, Graph::cycle(4)));
    auto e = contains_induced(Graph::cycle(6), Graph::path(3));
    REQUIRE(e);
    CHECK(verify_embedding(Graph::cycle(6), Graph::path(3), *e));
    CHECK(e->map == std::vector<int>{0, 1, 2});
    CHECK_FALSE(verify_embedding(Graph::cycle(6), Graph::path(3), Embedding{{0, 2, 4}}));
}

TEST_CASE("induced containment agrees with exhaustive search")
{
    std::mt19937_64 rng(29);
    for (int trial = 0 ; trial < 150 ; ++trial) {
        Graph host = oracle::random_graph(rng, 4 + trial % 6, 0.55);
        for (const Pattern & p : pattern_library()) {
            if (p.graph.order() > host.order())
                continue;
            auto e = contains_induced(host, p);
            CHECK(e.has_value() == oracle::induced_subgraph(host, p.graph));
            if (e)
                CHECK(verify_embedding(host, p.graph, *e));
        }
    }
}

TEST_CASE("odd cycle inflation recognition")
{
    CHECK(odd_cycle_inflation(Graph::cycle(5)));
    CHECK(odd_cycle_inflation(Graph::cycle(7)));
    CHECK_FALSE(odd_cycle_inflation(Graph::cycle(3)));
    CHECK_FALSE(odd_cycle_inflation(Graph::cycle(6)));
    CHECK_FALSE(odd_cycle_inflation(join(Graph(1), Graph::cycle(5))));

    // blow up C5 with clique sizes 1, 2, 3, 1, 2
    std::vector<int> sizes{1, 2, 3, 1, 2};
    std::vector<std::vector<int>> blocks;
    int next = 0;
    for (int s : sizes) {
        blocks.emplace_back();
        for (int i = 0 ; i < s ; ++i)
            blocks.back().push_back(next++);
    }
    std::vector<Edge> edges;
    for (int i = 0 ; i < 5 ; ++i) {
        for (std::size_t a = 0 ; a < blocks[i].size() ; ++a)
            for (std::size_t b = a + 1 ; b < blocks[i].size() ; ++b)
                edges.push_back({blocks[i][a], blocks[i][b]});
        for (int u : blocks[i])
            for (int v : blocks[(i + 1) % 5])
                edges.push_back({std::min(u, v), std::max(u, v)});
    }
    Graph g = Graph::from_edges(next, edges);
    auto classes = odd_cycle_inflation(g);
    REQUIRE(classes);
    CHECK(classes->size() == 5);
    CHECK(classes->front().contains(0));
    for (std::size_t i = 0 ; i < classes->size() ; ++i) {
        VertexSet a = (*classes)[i], b = (*classes)[(i + 1) % classes->size()];
        CHECK(g.is_clique(a));
        for (int u : a)
            CHECK(b.subset_of(g.neighbors(u)));
    }
}
