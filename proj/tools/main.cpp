#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oddminor/certificate_json.hpp"
#include "oddminor/cliques.hpp"
#include "oddminor/constructors.hpp"
#include "oddminor/graph6.hpp"
#include "oddminor/harness.hpp"
#include "oddminor/hfree.hpp"
#include "oddminor/seagulls.hpp"

using namespace oddminor;

namespace {
    struct Globals
    {
        int threads = 0;
        std::uint64_t node_budget = 100'000'000;
        std::string out;
    };

    // A graph6 string, or a file holding either one graph6 line or an "n m" edge list.
    Graph load_graph(const std::string & arg)
    {
        if (! std::filesystem::is_regular_file(arg))
            return parse_graph6(arg);
        std::ifstream in(arg);
        std::stringstream text;
        text << in.rdbuf();
        std::string s = text.str();
        std::string first = s.substr(0, s.find('\n'));
        if (first.find(' ') == std::string::npos)
            return parse_graph6(first);
        std::istringstream edges(s);
        return parse_edge_list(edges);
    }

    void emit(const Globals & globals, const std::string & text)
    {
        if (globals.out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(globals.out);
        if (! f)
            throw Error("cannot write " + globals.out);
        f << text;
    }

    std::string trace_summary(const ConstructionTrace & trace)
    {
        std::ostringstream out;
        for (const auto & s : trace.steps) {
            out << s.strategy << " +" << s.gained << " {";
            for (std::size_t i = 0 ; i < s.consumed.size() ; ++i)
                out << (i ? "," : "") << s.consumed[i];
            out << "}\n";
        }
        return out.str();
    }

    int run_invariants(const std::string & arg)
    {
        Graph g = load_graph(arg);
        InvariantReport r = invariant_report(g);
        std::cout << "n " << r.n << "\nm " << g.size() << "\nalpha " << r.alpha << "\nomega " << r.omega
                  << "\nchi " << r.chi << "\ndelta " << r.delta << "\nDelta " << r.Delta << "\nkappa " << r.kappa
                  << "\nmatching_complement " << r.max_matching_complement << '\n';
        return 0;
    }

    int run_oh(const std::string & arg, const Globals & globals)
    {
        Graph g = load_graph(arg);
        SearchBudget budget;
        budget.limit = globals.node_budget;
        OhResult r = odd_hadwiger_number(g, budget);
        std::cout << "oh " << r.value << '\n';
        if (! globals.out.empty())
            write_certificate_file(globals.out, g, r.certificate);
        return 0;
    }

    int run_seagulls(const std::string & arg, int count, bool conditions)
    {
        Graph g = load_graph(arg);
        auto packing = max_seagull_packing(g, count);
        if (packing) {
            std::cout << "packing of " << count << " found\n";
            for (const Seagull & s : packing->seagulls)
                std::cout << s.wing1 << '-' << s.center << '-' << s.wing2 << '\n';
        }
        else
            std::cout << "no packing of " << count << '\n';
        if (conditions) {
            ConditionReport c = cs_conditions(g, count);
            std::cout << "order " << c.cond_order << "\nconnectivity " << c.cond_connectivity
                      << "\ncapacity " << c.cond_capacity << "\nantimatching " << c.cond_antimatching
                      << "\nexceptional " << c.exceptional << '\n';
            if (c.violating_clique)
                std::cout << "low-capacity clique " << *c.violating_clique << '\n';
            if (c.violating_cut)
                std::cout << "small cut " << *c.violating_cut << '\n';
        }
        return packing ? 0 : 1;
    }

    int run_certify(const std::string & arg, std::optional<int> target, const std::string & strategy,
            const Globals & globals)
    {
        Graph g = load_graph(arg);
        const int alpha = independence_number(g);
        const int t = target.value_or(alpha == 0 ? 0 : (g.order() + alpha - 1) / alpha);
        SearchBudget budget;
        budget.limit = globals.node_budget;

        std::optional<Certified> result;
        if (strategy == "auto") {
            AutoCertifyOptions options;
            options.budget = &budget;
            result = auto_certify(g, t, options);
        }
        else if (strategy == "clique-seagulls")
            result = certify_by_clique_seagulls(g, t);
        else if (strategy == "min-degree") {
            Certified c = certify_min_degree(g);
            if (c.certificate.t >= t)
                result = std::move(c);
        }
        else if (strategy == "join") {
            AutoCertifyOptions options;
            options.budget = &budget;
            result = certify_by_join(g, t, options);
        }
        else
            result = certify_by_search(g, t, budget);

        if (! result) {
            std::cerr << "strategy " << strategy << " gives no certificate of order " << t << '\n';
            return 1;
        }
        emit(globals, certificate_to_json(g, result->certificate) + '\n');
        std::cerr << "order " << result->certificate.t << '\n' << trace_summary(result->trace);
        return 0;
    }

    int run_verify(const std::string & path)
    {
        CertificateFile f = read_certificate_file(path);
        if (auto v = verify_certificate(f.graph, f.certificate)) {
            std::cout << "invalid " << to_string(v->kind) << ": " << v->detail << '\n';
            return 1;
        }
        std::cout << "valid odd K" << f.certificate.t << " expansion\n";
        return 0;
    }

    int run_hfree(const std::string & arg, const std::string & name)
    {
        Graph g = load_graph(arg);
        for (const Pattern & p : pattern_library()) {
            if (! name.empty() && p.name != name)
                continue;
            if (auto e = contains_induced(g, p)) {
                std::cout << p.name << " contained at";
                for (int v : e->map)
                    std::cout << ' ' << v;
                std::cout << '\n';
            }
            else
                std::cout << p.name << " free\n";
        }
        return 0;
    }

    int run_enumerate(int n, bool triangle_free, bool min_degree, const Globals & globals)
    {
        std::vector<Graph> graphs = min_degree ? enumerate_min_degree(n)
            : triangle_free ? enumerate_triangle_free(n, globals.threads) : enumerate_alpha2(n, globals.threads);
        std::string text;
        for (const Graph & g : graphs)
            text += to_graph6(g) + '\n';
        emit(globals, text);
        std::cerr << graphs.size() << " graphs\n";
        return 0;
    }

    int run_sweep(SweepOptions options, const std::string & input, const Globals & globals)
    {
        options.threads = globals.threads;
        options.node_budget = globals.node_budget;
        SweepReport report = input.empty() ? sweep_conjecture(options)
            : sweep_graphs(ingest_graph6_file(input), options);
        write_report(report, globals.out.empty() ? "sweep" : globals.out);
        int fallback = 0;
        for (const auto & r : report.rows)
            fallback += r.strategy == "search";
        std::cout << report.rows.size() << " graphs, " << report.violations.size() << " violations, "
                  << report.inconclusive_count() << " inconclusive, " << fallback << " search fallbacks\n";
        for (const auto & v : report.violations)
            std::cout << "violation " << v.claim << ' ' << v.graph6 << ": " << v.detail << '\n';
        if (options.cert_dir) {
            auto bad = reverify_certificates(report, *options.cert_dir);
            for (const auto & g6 : bad)
                std::cout << "certificate failed re-verification " << g6 << '\n';
            if (! bad.empty())
                return exit_violations;
        }
        return report.exit_code();
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Odd clique minors in graphs with independence number at most two"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_option("--threads", globals.threads, "worker threads, 0 for all cores");
    app.add_option("--node-budget", globals.node_budget, "search node budget per graph");
    app.add_option("--out", globals.out, "output file (sweep: report base name)");

    std::string graph;
    auto graph_arg = [&] (CLI::App * sub) {
        sub->add_option("graph", graph, "graph6 string or file")->required();
    };

    int code = 0;
    auto * inv = app.add_subcommand("invariants", "alpha, omega, chi, delta, kappa and friends");
    graph_arg(inv);
    inv->callback([&] { code = run_invariants(graph); });

    auto * oh = app.add_subcommand("oh", "exact odd Hadwiger number with certificate");
    graph_arg(oh);
    oh->callback([&] { code = run_oh(graph, globals); });

    int count = 0;
    bool conditions = false;
    auto * sg = app.add_subcommand("seagulls", "disjoint seagull packing");
    graph_arg(sg);
    sg->add_option("--count", count, "number of seagulls")->required();
    sg->add_flag("--conditions", conditions, "also evaluate the four packing conditions");
    sg->callback([&] { code = run_seagulls(graph, count, conditions); });

    std::optional<int> target;
    std::string strategy = "auto";
    auto * cert = app.add_subcommand("certify", "construct an odd clique expansion certificate");
    graph_arg(cert);
    cert->add_option("--target", target, "order to reach, default ceil(n / alpha)");
    cert->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"auto", "clique-seagulls", "min-degree", "join", "search"}));
    cert->callback([&] { code = run_certify(graph, target, strategy, globals); });

    std::string cert_path;
    auto * ver = app.add_subcommand("verify", "check a certificate file");
    ver->add_option("certificate", cert_path)->required();
    ver->callback([&] { code = run_verify(cert_path); });

    std::string pattern_name;
    auto * hf = app.add_subcommand("hfree", "induced pattern containment");
    graph_arg(hf);
    hf->add_option("--pattern", pattern_name, "one pattern from the library");
    hf->callback([&] { code = run_hfree(graph, pattern_name); });

    int order = 0;
    bool triangle_free = false, min_degree = false;
    auto * en = app.add_subcommand("enumerate", "graphs with alpha <= 2 on n vertices, one per class");
    en->add_option("n", order)->required();
    en->add_flag("--triangle-free", triangle_free, "emit the triangle-free complements instead");
    en->add_flag("--min-degree", min_degree, "graphs with minimum degree >= n - 3, any alpha");
    en->callback([&] { code = run_enumerate(order, triangle_free, min_degree, globals); });

    SweepOptions sweep;
    std::string input, cert_dir, free_of;
    auto * sw = app.add_subcommand("sweep", "check the odd Hadwiger bound and related theorems");
    sw->add_option("--n-min", sweep.n_min);
    sw->add_option("--n-max", sweep.n_max);
    sw->add_option("--input", input, "graph6 file instead of built-in enumeration");
    sw->add_flag("--exact", sweep.exact, "compute exact oh");
    sw->add_option("--cert-dir", cert_dir, "store certificates here");
    sw->add_option("--free-of", free_of, "keep only graphs free of this pattern");
    sw->callback([&] {
        if (! cert_dir.empty())
            sweep.cert_dir = cert_dir;
        if (! free_of.empty())
            sweep.free_of = free_of;
        code = run_sweep(sweep, input, globals);
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_input_error;
    }
    catch (const SearchTimeout & e) {
        std::cerr << "timeout: " << e.what() << '\n';
        return exit_inconclusive;
    }
    catch (const Exhausted & e) {
        std::cerr << e.what() << '\n';
        return exit_violations;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return code;
}
