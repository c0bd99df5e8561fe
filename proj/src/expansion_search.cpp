#include "oddminor/expansion.hpp"

#include <algorithm>

#include "oddminor/cliques.hpp"

namespace oddminor {

namespace {
    // Singleton branches are pairwise joined by monochromatic edges among themselves, so they
    // form a clique of one colour; every other branch has at least two vertices. The search
    // therefore fixes the singleton clique S first (coloured 0), then distributes the remaining
    // vertices over t - |S| branches of size >= 2 in ascending vertex order, branches numbered
    // by their minimum vertex.
    class ExpansionSearch
    {
    public:
        ExpansionSearch(const Graph & g, int t, SearchBudget & budget)
            : g_(g), t_(t), budget_(budget), zero_(t), one_(t)
        {
        }

        std::optional<OddExpansionCertificate> run()
        {
            const int n = g_.order();
            if (t_ == 0)
                return OddExpansionCertificate{};
            if (t_ > n)
                return std::nullopt;

            const int min_singletons = std::max(0, 2 * t_ - n);
            std::vector<VertexSet> candidates;
            if (min_singletons == 0)
                candidates.push_back(VertexSet{});
            for (VertexSet k : all_cliques(g_))
                if (k.size() >= min_singletons && k.size() <= t_)
                    candidates.push_back(k);
            std::stable_sort(candidates.begin(), candidates.end(), [] (VertexSet a, VertexSet b) {
                return a.size() > b.size();
            });

            for (VertexSet s : candidates)
                if (auto c = with_singletons(s))
                    return c;
            return std::nullopt;
        }

    private:
        const Graph & g_;
        const int t_;
        SearchBudget & budget_;

        VertexSet singletons_;
        std::vector<int> rest_;
        std::vector<VertexSet> remaining_;
        int branches_needed_ = 0;
        int opened_ = 0;
        std::vector<VertexSet> zero_, one_;

        std::optional<OddExpansionCertificate> with_singletons(VertexSet s)
        {
            budget_.charge();
            singletons_ = s;
            rest_ = (g_.vertices() - s).to_vector();
            remaining_.assign(rest_.size() + 1, VertexSet{});
            for (std::size_t i = rest_.size() ; i-- > 0 ; )
                remaining_[i] = remaining_[i + 1] | VertexSet::singleton(rest_[i]);
            branches_needed_ = t_ - s.size();
            opened_ = 0;
            std::fill(zero_.begin(), zero_.end(), VertexSet{});
            std::fill(one_.begin(), one_.end(), VertexSet{});

            if (! assign(0))
                return std::nullopt;

            std::vector<VertexSet> branches;
            std::map<int, int> colors;
            for (int v : s) {
                branches.push_back(VertexSet::singleton(v));
                colors[v] = 0;
            }
            for (int b = 0 ; b < opened_ ; ++b) {
                branches.push_back(zero_[b] | one_[b]);
                for (int v : zero_[b])
                    colors[v] = 0;
                for (int v : one_[b])
                    colors[v] = 1;
            }
            auto c = assemble_certificate(g_, branches, colors);
            if (! c)
                throw std::logic_error("expansion search accepted an assignment that does not assemble");
            return c;
        }

        int size_of(int b) const { return zero_[b].size() + one_[b].size(); }

        bool assign(std::size_t i)
        {
            budget_.charge();
            const int remaining = static_cast<int>(rest_.size() - i);
            int need = 2 * (branches_needed_ - opened_);
            for (int b = 0 ; b < opened_ ; ++b)
                if (size_of(b) == 1)
                    ++need;
            if (need > remaining || ! feasible(remaining_[i]))
                return false;
            if (i == rest_.size())
                return accept();

            const int v = rest_[i];
            auto place = [&] (int b, int colour) {
                (colour == 0 ? zero_[b] : one_[b]).insert(v);
                if (assign(i + 1))
                    return true;
                (colour == 0 ? zero_[b] : one_[b]).erase(v);
                return false;
            };

            if (opened_ < branches_needed_) {
                // without singletons the global colour swap is fixed by branch 0's minimum
                const int colours = (singletons_.empty() && opened_ == 0) ? 1 : 2;
                int b = opened_++;
                for (int colour = 0 ; colour < colours ; ++colour)
                    if (place(b, colour))
                        return true;
                --opened_;
            }
            for (int b = 0 ; b < opened_ ; ++b)
                for (int colour = 0 ; colour < 2 ; ++colour)
                    if (place(b, colour))
                        return true;
            return assign(i + 1);
        }

        VertexSet neighbourhood(VertexSet s) const
        {
            VertexSet out;
            for (int v : s)
                out |= g_.neighbors(v);
            return out;
        }

        bool bichromatic_connected(int b) const
        {
            VertexSet all = zero_[b] | one_[b];
            VertexSet reached = VertexSet::singleton(all.first());
            VertexSet frontier = reached;
            while (! frontier.empty()) {
                VertexSet next = (neighbourhood(frontier & zero_[b]) & one_[b])
                    | (neighbourhood(frontier & one_[b]) & zero_[b]);
                next -= reached;
                reached |= next;
                frontier = next;
            }
            return reached == all;
        }

        // Relaxed completion test: unassigned vertices may join any branch in either colour.
        bool feasible(VertexSet free) const
        {
            for (int b = 0 ; b < opened_ ; ++b) {
                const VertexSet members = zero_[b] | one_[b];
                if (members.size() == 1 && neighbourhood(members).disjoint_from(free))
                    return false;
                VertexSet reached = VertexSet::singleton(members.first());
                VertexSet frontier = reached;
                while (! frontier.empty()) {
                    VertexSet next = (neighbourhood(frontier & zero_[b]) & (one_[b] | free))
                        | (neighbourhood(frontier & one_[b]) & (zero_[b] | free))
                        | (neighbourhood(frontier & free) & (members | free));
                    next -= reached;
                    reached |= next;
                    frontier = next;
                }
                if (! members.subset_of(reached))
                    return false;
                for (int s : singletons_)
                    if (g_.neighbors(s).disjoint_from(zero_[b] | free))
                        return false;
            }
            return true;
        }

        bool accept() const
        {
            for (int s : singletons_)
                for (int b = 0 ; b < opened_ ; ++b)
                    if (g_.neighbors(s).disjoint_from(zero_[b]))
                        return false;
            std::vector<VertexSet> reach0(opened_), reach1(opened_);
            for (int b = 0 ; b < opened_ ; ++b) {
                reach0[b] = neighbourhood(zero_[b]);
                reach1[b] = neighbourhood(one_[b]);
            }
            for (int a = 0 ; a < opened_ ; ++a)
                for (int b = a + 1 ; b < opened_ ; ++b)
                    if (reach0[a].disjoint_from(zero_[b]) && reach1[a].disjoint_from(one_[b]))
                        return false;
            for (int b = 0 ; b < opened_ ; ++b)
                if (! bichromatic_connected(b))
                    return false;
            return true;
        }
    };
}

std::optional<OddExpansionCertificate> has_odd_clique_expansion(const Graph & g, int t, SearchBudget & budget)
{
    if (t < 0)
        throw PreconditionFailed("expansion order must be nonnegative");
    if (g.order() > expansion_search_max_order)
        throw Unsupported("exhaustive expansion search is limited to " + std::to_string(expansion_search_max_order)
                + " vertices");
    return ExpansionSearch(g, t, budget).run();
}

std::optional<OddExpansionCertificate> has_odd_clique_expansion(const Graph & g, int t)
{
    SearchBudget budget;
    return has_odd_clique_expansion(g, t, budget);
}

} // namespace oddminor
