#include "oddminor/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "oddminor/certificate_json.hpp"
#include "oddminor/cliques.hpp"
#include "oddminor/constructors.hpp"
#include "oddminor/graph6.hpp"
#include "oddminor/hfree.hpp"

namespace oddminor {

int SweepReport::inconclusive_count() const
{
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [] (const SweepRow & r) { return r.inconclusive; }));
}

int SweepReport::exit_code() const
{
    if (! violations.empty())
        return exit_violations;
    if (inconclusive_count() > 0)
        return exit_inconclusive;
    return exit_clean;
}

namespace {
    int ceil_div(int a, int b) { return b == 0 ? 0 : (a + b - 1) / b; }

    bool omega_threshold(const InvariantReport & inv)
    {
        // n/4 for even n, (n+3)/4 for odd n
        return inv.n % 2 == 0 ? 4 * inv.omega >= inv.n : 4 * inv.omega >= inv.n + 3;
    }

    struct RowResult
    {
        SweepRow row;
        std::vector<SweepViolation> violations;
    };

    RowResult sweep_one(const Graph & g, const SweepOptions & options)
    {
        RowResult out;
        SweepRow & row = out.row;
        row.graph6 = to_graph6(g);
        row.label = canonical_label(g);
        row.invariants = invariant_report(g);
        const InvariantReport & inv = row.invariants;
        if (inv.alpha > 2)
            throw PreconditionFailed(row.graph6 + " has independence number " + std::to_string(inv.alpha));
        const int n = inv.n;
        const int half = ceil_div(n, 2);
        row.target = ceil_div(n, inv.alpha);

        if (omega_threshold(inv))
            row.flags.push_back("omega-threshold");
        if (n > 0 && inv.delta >= n - 3)
            row.flags.push_back("min-degree");
        if (inv.kappa < half)
            row.flags.push_back("low-connectivity");
        if (is_h_free(g, pattern("c4")))
            row.flags.push_back("c4-free");
        if (odd_cycle_inflation(g))
            row.flags.push_back("odd-cycle-inflation");
        for (const Pattern & p : pattern_library())
            if (p.theorem_pattern && is_h_free(g, p))
                row.flags.push_back("free:" + p.name);

        SearchBudget budget;
        budget.limit = options.node_budget;
        std::optional<OddExpansionCertificate> best;
        bool exhausted = false;
        try {
            AutoCertifyOptions auto_options;
            auto_options.budget = &budget;
            auto c = auto_certify(g, row.target, auto_options);
            row.strategy = c->trace.steps.empty() ? "trivial" : c->trace.steps.front().strategy;
            best = std::move(c->certificate);
            row.met = true;
            if (options.exact) {
                OhResult r = odd_hadwiger_number(g, budget);
                if (r.value > best->t)
                    best = std::move(r.certificate);
                row.oh_exact = true;
            }
        }
        catch (const SearchTimeout &) {
            row.inconclusive = true;
        }
        catch (const Exhausted &) {
            exhausted = true;
            row.strategy = "exhausted";
        }

        if (row.inconclusive) {
            row.strategy = "timeout";
            row.met = false;
            best.reset();
        }
        if (! best && ! row.inconclusive)
            best = clique_certificate(g, maximum_clique(g));
        if (best)
            row.oh = best->t;

        if (best && options.cert_dir) {
            row.cert_file = row.label.hex() + ".json";
            write_certificate_file(*options.cert_dir / row.cert_file, g, *best);
        }
        if (row.inconclusive)
            return out;

        auto violate = [&] (const std::string & claim, const std::string & detail) {
            out.violations.push_back({row.graph6, claim, detail});
        };
        const auto has = [&] (const std::string & f) {
            return std::find(row.flags.begin(), row.flags.end(), f) != row.flags.end();
        };
        const std::string oh_text = "oh " + std::string(row.oh_exact ? "= " : ">= ") + std::to_string(row.oh);

        if (exhausted)
            violate("conjecture", "no odd clique expansion of order " + std::to_string(row.target) + " exists");
        if (has("omega-threshold") && row.oh < half)
            violate("omega-threshold", oh_text + " < " + std::to_string(half));
        if (has("low-connectivity") && row.oh < half)
            violate("low-connectivity", oh_text + " < " + std::to_string(half));
        if (has("min-degree")) {
            int t = certify_min_degree(g).certificate.t;
            if (t < row.target)
                violate("min-degree", "constructed order " + std::to_string(t) + " < " + std::to_string(row.target));
        }
        if (row.oh_exact && (row.oh >= inv.chi) != (row.oh >= half))
            violate("chromatic-equivalence", oh_text + ", chi = " + std::to_string(inv.chi));

        // oh >= chi, checked exactly when oh is exact and through ceil(n/2) otherwise
        const int promised = row.oh_exact ? inv.chi : half;
        for (const auto & f : row.flags)
            if ((f == "c4-free" || f == "odd-cycle-inflation" || f.starts_with("free:")) && row.oh < promised)
                violate(f, oh_text + " < " + std::to_string(promised));
        return out;
    }
}

SweepReport sweep_graphs(const std::vector<Graph> & input, const SweepOptions & options)
{
    std::vector<const Graph *> graphs;
    std::optional<Pattern> filter;
    if (options.free_of)
        filter = pattern(*options.free_of);
    for (const Graph & g : input)
        if (! filter || is_h_free(g, *filter))
            graphs.push_back(&g);
    if (options.cert_dir)
        std::filesystem::create_directories(*options.cert_dir);

    std::vector<RowResult> results(graphs.size());
    std::vector<std::exception_ptr> errors(graphs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i ; (i = next++) < graphs.size() ; ) {
            try {
                results[i] = sweep_one(*graphs[i], options);
            }
            catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int threads = std::min<int>(resolve_threads(options.threads), std::max<std::size_t>(1, graphs.size()));
    std::vector<std::thread> pool;
    for (int w = 1 ; w < threads ; ++w)
        pool.emplace_back(work);
    work();
    for (auto & t : pool)
        t.join();
    for (auto & e : errors)
        if (e)
            std::rethrow_exception(e);

    std::sort(results.begin(), results.end(), [] (const RowResult & a, const RowResult & b) {
        return a.row.label < b.row.label;
    });
    SweepReport report;
    for (auto & r : results) {
        report.rows.push_back(std::move(r.row));
        for (auto & v : r.violations)
            report.violations.push_back(std::move(v));
    }
    return report;
}

SweepReport sweep_conjecture(const SweepOptions & options)
{
    std::vector<Graph> graphs;
    for (int n = options.n_min ; n <= options.n_max ; ++n)
        for (Graph & g : enumerate_alpha2(n, options.threads))
            graphs.push_back(std::move(g));
    return sweep_graphs(graphs, options);
}

std::vector<std::string> reverify_certificates(const SweepReport & report, const std::filesystem::path & cert_dir)
{
    std::vector<std::string> bad;
    for (const SweepRow & row : report.rows) {
        if (row.cert_file.empty())
            continue;
        try {
            CertificateFile f = read_certificate_file(cert_dir / row.cert_file);
            if (to_graph6(f.graph) != row.graph6 || verify_certificate(f.graph, f.certificate)
                    || f.certificate.t < row.oh)
                bad.push_back(row.graph6);
        }
        catch (const Error &) {
            bad.push_back(row.graph6);
        }
    }
    return bad;
}

} // namespace oddminor
