#include "oddminor/invariants.hpp"

#include <algorithm>
#include <queue>

namespace oddminor {

namespace {
    // Vertex v splits into in-node 2v and out-node 2v+1 joined by a unit arc;
    // graph edges become unbounded arcs out -> in in both directions.
    class SplitFlow
    {
    public:
        SplitFlow(const Graph & g, int s, int t)
            : g_(g), nodes_(2 * g.order()), cap_(nodes_ * nodes_, 0), s_(s), t_(t)
        {
            const int unbounded = g.order() + 1;
            for (int v = 0 ; v < g.order() ; ++v) {
                arc(in(v), out(v)) = (v == s || v == t) ? unbounded : 1;
                for (int u : g.neighbors(v))
                    arc(out(v), in(u)) = unbounded;
            }
        }

        int max_flow()
        {
            int flow = 0;
            std::vector<int> prev(nodes_);
            while (augment(prev))
                ++flow;
            return flow;
        }

        // Vertices whose unit arc crosses from the source side to the sink side.
        VertexSet cut() const
        {
            std::vector<char> reach(nodes_, 0);
            std::queue<int> q;
            q.push(out(s_));
            reach[out(s_)] = 1;
            while (! q.empty()) {
                int x = q.front();
                q.pop();
                for (int y = 0 ; y < nodes_ ; ++y)
                    if (! reach[y] && cap_[x * nodes_ + y] > 0) {
                        reach[y] = 1;
                        q.push(y);
                    }
            }
            VertexSet c;
            for (int v = 0 ; v < g_.order() ; ++v)
                if (reach[in(v)] && ! reach[out(v)])
                    c.insert(v);
            return c;
        }

    private:
        const Graph & g_;
        int nodes_;
        std::vector<int> cap_;
        int s_, t_;

        static int in(int v) { return 2 * v; }
        static int out(int v) { return 2 * v + 1; }
        int & arc(int x, int y) { return cap_[x * nodes_ + y]; }

        bool augment(std::vector<int> & prev)
        {
            std::fill(prev.begin(), prev.end(), -1);
            std::queue<int> q;
            q.push(out(s_));
            prev[out(s_)] = out(s_);
            while (! q.empty() && prev[in(t_)] == -1) {
                int x = q.front();
                q.pop();
                for (int y = 0 ; y < nodes_ ; ++y)
                    if (prev[y] == -1 && cap_[x * nodes_ + y] > 0) {
                        prev[y] = x;
                        q.push(y);
                    }
            }
            if (prev[in(t_)] == -1)
                return false;
            for (int y = in(t_) ; y != out(s_) ; y = prev[y]) {
                --arc(prev[y], y);
                ++arc(y, prev[y]);
            }
            return true;
        }
    };

    bool complete_graph(const Graph & g)
    {
        return g.size() == g.order() * (g.order() - 1) / 2;
    }
}

int local_connectivity(const Graph & g, int s, int t)
{
    if (s == t || g.adjacent(s, t))
        throw PreconditionFailed("local connectivity needs two distinct nonadjacent vertices");
    return SplitFlow(g, s, t).max_flow();
}

VertexSet minimum_vertex_cut(const Graph & g)
{
    const int n = g.order();
    if (complete_graph(g))
        return n == 0 ? VertexSet{} : VertexSet::range(n - 1);

    int best = n;
    VertexSet best_cut;
    for (int s = 0 ; s < n ; ++s)
        for (int t = s + 1 ; t < n ; ++t) {
            if (g.adjacent(s, t))
                continue;
            SplitFlow f(g, s, t);
            int k = f.max_flow();
            if (k < best) {
                best = k;
                best_cut = f.cut();
                if (best == 0)
                    return best_cut;
            }
        }
    return best_cut;
}

int vertex_connectivity(const Graph & g)
{
    if (complete_graph(g))
        return std::max(0, g.order() - 1);
    return minimum_vertex_cut(g).size();
}

} // namespace oddminor
