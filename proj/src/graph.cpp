#include "oddminor/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace oddminor {

VertexSet::VertexSet(std::initializer_list<int> members)
{
    for (int v : members)
        insert(v);
}

VertexSet VertexSet::of(std::span<const int> members)
{
    VertexSet s;
    for (int v : members) {
        if (v < 0 || v >= 64)
            throw IndexOutOfRange("vertex " + std::to_string(v) + " does not fit a vertex set");
        s.insert(v);
    }
    return s;
}

std::vector<int> VertexSet::to_vector() const
{
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this)
        out.push_back(v);
    return out;
}

std::ostream & operator<<(std::ostream & os, VertexSet s)
{
    os << '{';
    bool first = true;
    for (int v : s) {
        if (! first)
            os << ',';
        os << v;
        first = false;
    }
    return os << '}';
}

bool lex_less(VertexSet a, VertexSet b)
{
    while (! a.empty() && ! b.empty()) {
        int x = a.first(), y = b.first();
        if (x != y)
            return x < y;
        a.erase(x);
        b.erase(y);
    }
    return a.empty() && ! b.empty();
}

Graph::Graph(int n) : n_(n), rows_(n, 0)
{
    if (n < 0 || n > max_order)
        throw Unsupported("graphs are limited to " + std::to_string(max_order) + " vertices, got " + std::to_string(n));
}

Graph Graph::from_rows(int n, std::vector<std::uint64_t> rows)
{
    Graph g(n);
    if (static_cast<int>(rows.size()) != n)
        throw InvalidGraph("row count does not match vertex count");
    const std::uint64_t domain = VertexSet::range(n).bits();
    for (int v = 0 ; v < n ; ++v) {
        if (rows[v] & ~domain)
            throw InvalidGraph("neighbor index out of range in row " + std::to_string(v));
        if ((rows[v] >> v) & 1U)
            throw InvalidGraph("loop at vertex " + std::to_string(v));
    }
    for (int v = 0 ; v < n ; ++v)
        for (int u : VertexSet::from_bits(rows[v]))
            if (! ((rows[u] >> v) & 1U))
                throw InvalidGraph("adjacency not symmetric between " + std::to_string(u) + " and " + std::to_string(v));
    g.rows_ = std::move(rows);
    return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    std::vector<std::uint64_t> rows(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw IndexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw InvalidGraph("loop at vertex " + std::to_string(u));
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    return from_rows(n, std::move(rows));
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (int v = 0 ; v < n ; ++v)
        g.rows_[v] = VertexSet::range(n).bits() & ~(std::uint64_t{1} << v);
    return g;
}

Graph Graph::cycle(int n)
{
    if (n < 3)
        throw InvalidGraph("a cycle needs at least three vertices");
    std::vector<Edge> e;
    for (int v = 0 ; v < n ; ++v)
        e.push_back({v, (v + 1) % n});
    return from_edges(n, e);
}

Graph Graph::path(int n)
{
    std::vector<Edge> e;
    for (int v = 0 ; v + 1 < n ; ++v)
        e.push_back({v, v + 1});
    return from_edges(n, e);
}

int Graph::size() const
{
    int twice = 0;
    for (auto r : rows_)
        twice += std::popcount(r);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0 ; u < n_ ; ++u)
        for (int v : VertexSet::from_bits(rows_[u]))
            if (u < v)
                out.push_back({u, v});
    return out;
}

bool Graph::is_clique(VertexSet s) const
{
    for (int v : s)
        if (! (s - VertexSet::singleton(v)).subset_of(neighbors(v)))
            return false;
    return true;
}

bool Graph::is_independent(VertexSet s) const
{
    for (int v : s)
        if (! s.disjoint_from(neighbors(v)))
            return false;
    return true;
}

void Graph::check_subset(VertexSet s) const
{
    if (! s.subset_of(vertices()))
        throw IndexOutOfRange("vertex set " + [&] { std::ostringstream o; o << s; return o.str(); }()
                + " is not within a graph on " + std::to_string(n_) + " vertices");
}

Graph complement(const Graph & g)
{
    const int n = g.order();
    std::vector<std::uint64_t> rows(n);
    const std::uint64_t all = VertexSet::range(n).bits();
    for (int v = 0 ; v < n ; ++v)
        rows[v] = all & ~g.row(v) & ~(std::uint64_t{1} << v);
    return Graph::from_rows(n, std::move(rows));
}

Graph induced(const Graph & g, VertexSet s)
{
    g.check_subset(s);
    const auto members = s.to_vector();
    const int k = static_cast<int>(members.size());
    std::vector<std::uint64_t> rows(k, 0);
    for (int i = 0 ; i < k ; ++i)
        for (int j = 0 ; j < k ; ++j)
            if (g.adjacent(members[i], members[j]))
                rows[i] |= std::uint64_t{1} << j;
    return Graph::from_rows(k, std::move(rows));
}

namespace {
    Graph combine(const Graph & g1, const Graph & g2, bool cross)
    {
        const int n1 = g1.order(), n2 = g2.order(), n = n1 + n2;
        if (n > Graph::max_order)
            throw Unsupported("combined graph exceeds " + std::to_string(Graph::max_order) + " vertices");
        std::vector<std::uint64_t> rows(n, 0);
        const std::uint64_t first = VertexSet::range(n1).bits();
        const std::uint64_t second = VertexSet::range(n).bits() & ~first;
        for (int v = 0 ; v < n1 ; ++v)
            rows[v] = g1.row(v) | (cross ? second : 0);
        for (int v = 0 ; v < n2 ; ++v)
            rows[n1 + v] = (g2.row(v) << n1) | (cross ? first : 0);
        return Graph::from_rows(n, std::move(rows));
    }
}

Graph join(const Graph & g1, const Graph & g2)
{
    return combine(g1, g2, true);
}

Graph disjoint_union(const Graph & g1, const Graph & g2)
{
    return combine(g1, g2, false);
}

Graph with_edges(const Graph & g, std::span<const Edge> extra)
{
    auto e = g.edges();
    e.insert(e.end(), extra.begin(), extra.end());
    return Graph::from_edges(g.order(), e);
}

Graph with_vertex(const Graph & g, VertexSet s)
{
    g.check_subset(s);
    auto rows = g.rows();
    const int n = g.order();
    if (n + 1 > Graph::max_order)
        throw Unsupported("graph would exceed the vertex limit");
    for (int v : s)
        rows[v] |= std::uint64_t{1} << n;
    rows.push_back(s.bits());
    return Graph::from_rows(n + 1, std::move(rows));
}

Graph permuted(const Graph & g, std::span<const int> perm)
{
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw InvalidGraph("permutation length does not match graph order");
    std::vector<std::uint64_t> rows(n, 0);
    for (int u = 0 ; u < n ; ++u)
        for (int v : g.neighbors(u))
            rows[perm[u]] |= std::uint64_t{1} << perm[v];
    return Graph::from_rows(n, std::move(rows));
}

std::vector<VertexSet> components(const Graph & g)
{
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (! unseen.empty()) {
        VertexSet comp = VertexSet::singleton(unseen.first());
        VertexSet frontier = comp;
        while (! frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                next |= g.neighbors(v);
            next -= comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        unseen -= comp;
    }
    return out;
}

bool is_connected(const Graph & g)
{
    return components(g).size() <= 1;
}

Graph parse_edge_list(std::istream & in)
{
    std::string line;
    auto next_line = [&] (const char * what) {
        while (std::getline(in, line)) {
            auto pos = line.find_first_not_of(" \t\r");
            if (pos != std::string::npos)
                return;
        }
        throw MalformedEdgeList(std::string("unexpected end of input while reading ") + what);
    };

    next_line("header");
    int n = -1, m = -1;
    {
        std::istringstream hs(line);
        std::string rest;
        if (! (hs >> n >> m) || (hs >> rest) || n < 0 || m < 0)
            throw MalformedEdgeList("bad header line: \"" + line + "\"");
    }
    if (n > Graph::max_order)
        throw Unsupported("edge list declares " + std::to_string(n) + " vertices");

    std::vector<Edge> edges;
    for (int i = 0 ; i < m ; ++i) {
        next_line("edge");
        std::istringstream es(line);
        int u, v;
        std::string rest;
        if (! (es >> u >> v) || (es >> rest))
            throw MalformedEdgeList("bad edge line " + std::to_string(i + 2) + ": \"" + line + "\"");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw MalformedEdgeList("invalid edge on line " + std::to_string(i + 2));
        edges.push_back({u, v});
    }
    return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream & out, const Graph & g)
{
    auto e = g.edges();
    out << g.order() << ' ' << e.size() << '\n';
    for (auto [u, v] : e)
        out << u << ' ' << v << '\n';
}

} // namespace oddminor
