#include "oddminor/harness.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "oddminor/graph6.hpp"

namespace oddminor {

int resolve_threads(int requested)
{
    if (requested > 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {
    void independent_sets(const Graph & h, int v, VertexSet chosen, VertexSet allowed,
            const std::function<void (VertexSet)> & emit)
    {
        if (v == h.order()) {
            emit(chosen);
            return;
        }
        independent_sets(h, v + 1, chosen, allowed, emit);
        if (allowed.contains(v))
            independent_sets(h, v + 1, chosen | VertexSet::singleton(v), allowed - h.neighbors(v), emit);
    }

    using LabelMap = std::map<std::string, Graph>;

    LabelMap extend(const std::vector<Graph> & parents, int threads)
    {
        threads = std::min<int>(resolve_threads(threads), std::max<std::size_t>(1, parents.size()));
        std::vector<LabelMap> partial(threads);
        auto work = [&] (int w) {
            for (std::size_t i = w ; i < parents.size() ; i += threads) {
                const Graph & h = parents[i];
                independent_sets(h, 0, {}, h.vertices(), [&] (VertexSet s) {
                    CanonicalForm f = canonical_form(with_vertex(h, s));
                    std::string key = to_graph6(f.graph);
                    partial[w].try_emplace(std::move(key), std::move(f.graph));
                });
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1 ; w < threads ; ++w)
            pool.emplace_back(work, w);
        work(0);
        for (auto & t : pool)
            t.join();
        LabelMap all = std::move(partial[0]);
        for (int w = 1 ; w < threads ; ++w)
            all.merge(partial[w]);
        return all;
    }
}

std::vector<Graph> enumerate_triangle_free(int n, int threads)
{
    if (n < 0)
        throw PreconditionFailed("order must be nonnegative");
    if (n > enumerate_max_order)
        throw Unsupported("built-in enumeration is limited to " + std::to_string(enumerate_max_order)
                + " vertices; ingest larger corpora from graph6 files");
    std::vector<Graph> level{Graph(0)};
    for (int k = 1 ; k <= n ; ++k) {
        LabelMap next = extend(level, threads);
        level.clear();
        for (auto & [_, g] : next)
            level.push_back(std::move(g));
    }
    return level;
}

std::vector<Graph> enumerate_alpha2(int n, int threads)
{
    std::vector<std::pair<std::string, Graph>> keyed;
    for (const Graph & h : enumerate_triangle_free(n, threads)) {
        CanonicalForm f = canonical_form(complement(h));
        keyed.emplace_back(to_graph6(f.graph), std::move(f.graph));
    }
    std::sort(keyed.begin(), keyed.end(), [] (const auto & a, const auto & b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (auto & [_, g] : keyed) {
        if (independence_number(g) > 2)
            throw std::logic_error("enumerated graph has an independent triple");
        out.push_back(std::move(g));
    }
    return out;
}

namespace {
    struct Piece
    {
        int size;
        bool cycle;

        auto operator<=>(const Piece &) const = default;
    };

    void min_degree_rec(int left, Piece bound, std::vector<Piece> & parts, std::vector<Graph> & out)
    {
        if (left == 0) {
            Graph h(0);
            for (Piece p : parts)
                h = disjoint_union(h, p.cycle ? Graph::cycle(p.size) : Graph::path(p.size));
            out.push_back(complement(h));
            return;
        }
        for (int size = std::min(left, bound.size) ; size >= 1 ; --size)
            for (bool cycle : {true, false}) {
                Piece p{size, cycle};
                if ((cycle && size < 3) || bound < p)
                    continue;
                parts.push_back(p);
                min_degree_rec(left - size, p, parts, out);
                parts.pop_back();
            }
    }
}

std::vector<Graph> enumerate_min_degree(int n)
{
    if (n < 0)
        throw PreconditionFailed("order must be nonnegative");
    if (n > Graph::max_order)
        throw Unsupported("order exceeds " + std::to_string(Graph::max_order));
    std::vector<Graph> out;
    std::vector<Piece> parts;
    min_degree_rec(n, Piece{n, true}, parts, out);
    return out;
}

std::vector<Graph> ingest_graph6(std::istream & in)
{
    std::vector<Graph> out;
    std::string line;
    for (int number = 1 ; std::getline(in, line) ; ++number) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(parse_graph6(line));
        }
        catch (const MalformedGraph6 & e) {
            throw MalformedGraph6("line " + std::to_string(number) + ": " + e.what());
        }
        catch (const Unsupported & e) {
            throw Unsupported("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

std::vector<Graph> ingest_graph6_file(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (! in)
        throw Error("cannot read " + path.string());
    return ingest_graph6(in);
}

} // namespace oddminor
