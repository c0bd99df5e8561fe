#include "oddminor/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "oddminor/graph6.hpp"

namespace oddminor {

std::string CanonicalLabel::hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

namespace {
    constexpr int max_n = canonical_max_order;

    using Cells = std::vector<VertexSet>;
    using Key = std::array<std::uint16_t, max_n>;
    using Perm = std::array<int, max_n>;

    class Canonicaliser
    {
    public:
        explicit Canonicaliser(const Graph & g) : g_(g), n_(g.order()) {}

        CanonicalForm run()
        {
            Cells initial;
            if (n_ > 0)
                initial.push_back(g_.vertices());
            std::vector<int> path;
            search(std::move(initial), path);

            std::vector<int> position(best_perm_.begin(), best_perm_.begin() + n_);
            return CanonicalForm{permuted(g_, position), std::move(position)};
        }

    private:
        const Graph & g_;
        int n_;
        bool have_best_ = false;
        Key best_key_{};
        Perm best_perm_{};
        Perm best_inverse_{};
        std::vector<Perm> automorphisms_;

        // Splits every cell by neighbor counts into the current cells until stable.
        void refine(Cells & cells) const
        {
            std::vector<std::pair<std::vector<int>, int>> sig;
            for (bool changed = true ; changed ; ) {
                changed = false;
                Cells next;
                next.reserve(n_);
                for (VertexSet cell : cells) {
                    if (cell.size() == 1) {
                        next.push_back(cell);
                        continue;
                    }
                    sig.clear();
                    for (int v : cell) {
                        std::vector<int> counts(cells.size());
                        for (std::size_t k = 0 ; k < cells.size() ; ++k)
                            counts[k] = (g_.neighbors(v) & cells[k]).size();
                        sig.emplace_back(std::move(counts), v);
                    }
                    std::sort(sig.begin(), sig.end());
                    VertexSet part;
                    for (std::size_t i = 0 ; i < sig.size() ; ++i) {
                        if (i > 0 && sig[i].first != sig[i - 1].first) {
                            next.push_back(part);
                            part = VertexSet{};
                            changed = true;
                        }
                        part.insert(sig[i].second);
                    }
                    next.push_back(part);
                }
                cells = std::move(next);
            }
        }

        void leaf(const Cells & cells)
        {
            Perm pos{};
            for (int i = 0 ; i < n_ ; ++i)
                pos[cells[i].first()] = i;

            Key key{};
            for (int u = 0 ; u < n_ ; ++u) {
                std::uint16_t row = 0;
                for (int w : g_.neighbors(u))
                    row |= static_cast<std::uint16_t>(1U << (n_ - 1 - pos[w]));
                key[pos[u]] = row;
            }

            if (! have_best_ || key > best_key_) {
                have_best_ = true;
                best_key_ = key;
                best_perm_ = pos;
                for (int v = 0 ; v < n_ ; ++v)
                    best_inverse_[pos[v]] = v;
            }
            else if (key == best_key_) {
                Perm gamma{};
                for (int v = 0 ; v < n_ ; ++v)
                    gamma[v] = best_inverse_[pos[v]];
                automorphisms_.push_back(gamma);
            }
        }

        int find(std::array<int, max_n> & parent, int v) const
        {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        }

        void search(Cells cells, std::vector<int> & path)
        {
            refine(cells);
            if (static_cast<int>(cells.size()) == n_) {
                leaf(cells);
                return;
            }

            std::size_t target = 0;
            while (cells[target].size() == 1)
                ++target;
            const VertexSet cell = cells[target];

            VertexSet tried;
            for (int v : cell) {
                // orbits of the group generated by known automorphisms fixing the path
                std::array<int, max_n> parent{};
                std::iota(parent.begin(), parent.end(), 0);
                for (const auto & gamma : automorphisms_) {
                    bool fixes = std::all_of(path.begin(), path.end(), [&] (int p) { return gamma[p] == p; });
                    if (! fixes)
                        continue;
                    for (int x = 0 ; x < n_ ; ++x) {
                        int a = find(parent, x), b = find(parent, gamma[x]);
                        if (a != b)
                            parent[a] = b;
                    }
                }
                bool redundant = false;
                for (int t : tried)
                    if (find(parent, t) == find(parent, v)) {
                        redundant = true;
                        break;
                    }
                if (redundant)
                    continue;
                tried.insert(v);

                Cells child;
                child.reserve(cells.size() + 1);
                for (std::size_t i = 0 ; i < cells.size() ; ++i) {
                    if (i == target) {
                        child.push_back(VertexSet::singleton(v));
                        child.push_back(cell - VertexSet::singleton(v));
                    }
                    else
                        child.push_back(cells[i]);
                }
                path.push_back(v);
                search(std::move(child), path);
                path.pop_back();
            }
        }
    };
}

CanonicalForm canonical_form(const Graph & g)
{
    if (g.order() > canonical_max_order)
        throw Unsupported("canonical labeling is limited to " + std::to_string(canonical_max_order) + " vertices");
    return Canonicaliser(g).run();
}

CanonicalLabel canonical_label(const Graph & g)
{
    return CanonicalLabel{to_graph6(canonical_form(g).graph)};
}

bool isomorphic(const Graph & a, const Graph & b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return canonical_label(a) == canonical_label(b);
}

} // namespace oddminor
