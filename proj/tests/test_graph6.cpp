#include <doctest.h>

#include <random>

#include "oddminor/graph6.hpp"
#include "oracles.hpp"

using namespace oddminor;

TEST_CASE("graph6 known strings")
{
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph::complete(2)) == "A_");
    CHECK(to_graph6(Graph::cycle(5)) == "Dhc");
    CHECK(to_graph6(Graph::complete(4)) == "C~");
    CHECK(parse_graph6("Dhc") == Graph::cycle(5));
    CHECK(parse_graph6(">>graph6<<Dhc") == Graph::cycle(5));
    CHECK(parse_graph6("Dhc\n") == Graph::cycle(5));
    CHECK(parse_graph6("Dhc\r\n") == Graph::cycle(5));
}

TEST_CASE("graph6 rejects malformed input")
{
    CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("D h"), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("Dh"), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("Dhcc"), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("A`"), MalformedGraph6);
    CHECK_THROWS_AS(parse_graph6("~?@"), MalformedGraph6);
}

TEST_CASE("graph6 matches a reference encoder and round-trips")
{
    std::mt19937_64 rng(3);
    for (int n = 0 ; n <= 62 ; ++n)
        for (int trial = 0 ; trial < 10 ; ++trial) {
            Graph g = oracle::random_graph(rng, n, trial / 10.0);
            std::string s = to_graph6(g);
            CHECK(s == oracle::graph6(g));
            CHECK(parse_graph6(s) == g);
        }
}
