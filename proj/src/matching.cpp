#include "oddminor/invariants.hpp"

#include <algorithm>
#include <queue>

namespace oddminor {

namespace {
    // Edmonds' algorithm with explicit blossom contraction via base labels.
    class Blossom
    {
    public:
        explicit Blossom(const Graph & g)
            : g_(g), n_(g.order()), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_)
        {
        }

        std::vector<int> run()
        {
            // greedy start, lowest indices first
            for (int v = 0 ; v < n_ ; ++v)
                if (mate_[v] == -1)
                    for (int u : g_.neighbors(v))
                        if (mate_[u] == -1) {
                            mate_[u] = v;
                            mate_[v] = u;
                            break;
                        }

            for (int root = 0 ; root < n_ ; ++root)
                if (mate_[root] == -1) {
                    int end = find_path(root);
                    while (end != -1) {
                        int pv = parent_[end], ppv = mate_[pv];
                        mate_[end] = pv;
                        mate_[pv] = end;
                        end = ppv;
                    }
                }
            return mate_;
        }

    private:
        const Graph & g_;
        int n_;
        std::vector<int> mate_, parent_, base_;
        std::vector<char> used_, in_blossom_;

        int lca(int a, int b)
        {
            std::vector<char> seen(n_, 0);
            for (;;) {
                a = base_[a];
                seen[a] = 1;
                if (mate_[a] == -1)
                    break;
                a = parent_[mate_[a]];
            }
            for (;;) {
                b = base_[b];
                if (seen[b])
                    return b;
                b = parent_[mate_[b]];
            }
        }

        void mark_path(int v, int b, int child)
        {
            while (base_[v] != b) {
                in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
                parent_[v] = child;
                child = mate_[v];
                v = parent_[mate_[v]];
            }
        }

        int find_path(int root)
        {
            std::fill(used_.begin(), used_.end(), 0);
            std::fill(parent_.begin(), parent_.end(), -1);
            for (int i = 0 ; i < n_ ; ++i)
                base_[i] = i;

            used_[root] = 1;
            std::queue<int> q;
            q.push(root);
            while (! q.empty()) {
                int v = q.front();
                q.pop();
                for (int to : g_.neighbors(v)) {
                    if (base_[v] == base_[to] || mate_[v] == to)
                        continue;
                    if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                        int cur = lca(v, to);
                        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                        mark_path(v, cur, to);
                        mark_path(to, cur, v);
                        for (int i = 0 ; i < n_ ; ++i)
                            if (in_blossom_[base_[i]]) {
                                base_[i] = cur;
                                if (! used_[i]) {
                                    used_[i] = 1;
                                    q.push(i);
                                }
                            }
                    }
                    else if (parent_[to] == -1) {
                        parent_[to] = v;
                        if (mate_[to] == -1)
                            return to;
                        used_[mate_[to]] = 1;
                        q.push(mate_[to]);
                    }
                }
            }
            return -1;
        }
    };
}

std::vector<int> maximum_matching(const Graph & g)
{
    return Blossom(g).run();
}

int max_matching(const Graph & g)
{
    auto mate = maximum_matching(g);
    return static_cast<int>(std::count_if(mate.begin(), mate.end(), [] (int m) { return m != -1; })) / 2;
}

} // namespace oddminor
