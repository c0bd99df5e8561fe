#include <doctest.h>

#include <map>
#include <random>

#include "oddminor/canonical.hpp"
#include "oddminor/graph6.hpp"
#include "oracles.hpp"

using namespace oddminor;

TEST_CASE("canonical label is invariant under relabeling")
{
    std::mt19937_64 rng(5);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        const int n = 1 + trial % 16;
        Graph g = oracle::random_graph(rng, n, 0.3 + 0.4 * (trial % 3) / 2.0);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = permuted(g, perm);
        CHECK(canonical_label(g) == canonical_label(h));
        CHECK(isomorphic(g, h));
        CanonicalForm f = canonical_form(g);
        CHECK(permuted(g, f.position) == f.graph);
        CHECK(canonical_label(g).bytes == to_graph6(f.graph));
    }
}

TEST_CASE("canonical label separates exactly the isomorphism classes on six vertices")
{
    // every labeled graph on 6 vertices, classed by the naive permutation minimum
    std::map<std::string, std::string> naive_to_label;
    std::map<std::string, std::string> label_to_naive;
    for (unsigned code = 0 ; code < (1U << 15) ; ++code) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int i = 0 ; i < 6 ; ++i)
            for (int j = i + 1 ; j < 6 ; ++j, ++bit)
                if (code >> bit & 1U)
                    edges.push_back({i, j});
        Graph g = Graph::from_edges(6, edges);
        std::string naive = oracle::naive_canonical(g), label = canonical_label(g).bytes;
        auto [a, fresh_a] = naive_to_label.try_emplace(naive, label);
        auto [b, fresh_b] = label_to_naive.try_emplace(label, naive);
        CHECK(a->second == label);
        CHECK(b->second == naive);
    }
    CHECK(naive_to_label.size() == 156);
    CHECK(label_to_naive.size() == 156);
}

TEST_CASE("canonical labeling limits and hex form")
{
    CHECK_THROWS_AS(canonical_label(Graph(17)), Unsupported);
    CHECK(canonical_label(Graph(1)).hex() == "40");
    CHECK_FALSE(isomorphic(Graph::cycle(6), disjoint_union(Graph::cycle(3), Graph::cycle(3))));
    CHECK(isomorphic(Graph::cycle(5), complement(Graph::cycle(5))));
}
