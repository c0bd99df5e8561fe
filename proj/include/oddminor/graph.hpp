#ifndef ODDMINOR_GRAPH_HPP
#define ODDMINOR_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "oddminor/errors.hpp"

namespace oddminor {

/// A set of vertex indices in [0, 64), stored as a single machine word.
class VertexSet
{
public:
    class iterator
    {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::uint64_t bits) : bits_(bits) {}

        int operator*() const { return std::countr_zero(bits_); }
        iterator & operator++()
        {
            bits_ &= bits_ - 1;
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator &) const = default;

    private:
        std::uint64_t bits_ = 0;
    };

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> members);

    static constexpr VertexSet from_bits(std::uint64_t bits)
    {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }

    static VertexSet of(std::span<const int> members);
    /// {0, ..., n-1}
    static constexpr VertexSet range(int n)
    {
        return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet singleton(int v) { return from_bits(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    /// Lowest member; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits_); }
    /// Highest member; undefined on the empty set.
    constexpr int last() const { return 63 - std::countl_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool disjoint_from(VertexSet other) const { return (bits_ & other.bits_) == 0; }

    std::vector<int> to_vector() const;

    iterator begin() const { return iterator{bits_}; }
    iterator end() const { return iterator{}; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
    constexpr VertexSet & operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet & operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet & operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

std::ostream & operator<<(std::ostream &, VertexSet);

/// Lexicographic order on the sorted member lists.
bool lex_less(VertexSet a, VertexSet b);

struct Edge
{
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge &) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bit-row adjacency.
class Graph
{
public:
    static constexpr int max_order = 62;

    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws InvalidGraph unless rows describe a symmetric irreflexive relation on [0, n).
    static Graph from_rows(int n, std::vector<std::uint64_t> rows);
    static Graph from_edges(int n, std::span<const Edge> edges);

    static Graph complete(int n);
    static Graph empty(int n) { return Graph(n); }
    static Graph cycle(int n);
    static Graph path(int n);

    int order() const { return n_; }
    int size() const;

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
    VertexSet neighbors(int v) const { return VertexSet::from_bits(rows_[v]); }
    /// N[v]
    VertexSet closed_neighbors(int v) const { return VertexSet::from_bits(rows_[v]) | VertexSet::singleton(v); }
    int degree(int v) const { return std::popcount(rows_[v]); }
    VertexSet vertices() const { return VertexSet::range(n_); }
    std::uint64_t row(int v) const { return rows_[v]; }
    const std::vector<std::uint64_t> & rows() const { return rows_; }

    /// Edges (u < v) in lexicographic order.
    std::vector<Edge> edges() const;

    bool is_clique(VertexSet s) const;
    bool is_independent(VertexSet s) const;
    /// Throws IndexOutOfRange if s has members outside [0, n).
    void check_subset(VertexSet s) const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Edge uv present iff absent in g (u != v).
Graph complement(const Graph & g);

/// Relabels the members of s to 0..|s|-1 in ascending order.
Graph induced(const Graph & g, VertexSet s);

/// G1 + G2; g2's vertices are shifted by g1.order().
Graph join(const Graph & g1, const Graph & g2);
Graph disjoint_union(const Graph & g1, const Graph & g2);

/// Adds the listed edges to g (which must not already contain them as loops).
Graph with_edges(const Graph & g, std::span<const Edge> extra);
/// Adds a new vertex n adjacent to exactly the members of s.
Graph with_vertex(const Graph & g, VertexSet s);

/// Applies the relabeling v -> perm[v].
Graph permuted(const Graph & g, std::span<const int> perm);

bool is_connected(const Graph & g);
/// Connected components in order of their minimum vertex.
std::vector<VertexSet> components(const Graph & g);

/// "n m" header followed by m lines "u v" (0-based).
Graph parse_edge_list(std::istream & in);
void write_edge_list(std::ostream & out, const Graph & g);

} // namespace oddminor

#endif
