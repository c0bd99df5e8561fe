#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "oddminor/certificate_json.hpp"
#include "oddminor/cliques.hpp"
#include "oddminor/graph6.hpp"
#include "oddminor/harness.hpp"
#include "oddminor/hfree.hpp"
#include "oracles.hpp"

using namespace oddminor;
namespace fs = std::filesystem;

namespace {
    fs::path scratch(const std::string & name)
    {
        fs::path p = fs::temp_directory_path() / ("oddminor-test-" + name);
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }

    // every labeled triangle-free graph on n vertices, edge by edge, deduplicated by canonical label
    std::size_t brute_force_classes(int n)
    {
        std::vector<Edge> pairs;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i)
                pairs.push_back({i, j});
        std::set<std::string> labels;
        std::vector<std::uint64_t> rows(n, 0);
        std::function<void (std::size_t)> rec = [&] (std::size_t k) {
            if (k == pairs.size()) {
                // triangle-free by construction, so the complement has alpha <= 2
                labels.insert(canonical_label(complement(Graph::from_rows(n, rows))).bytes);
                return;
            }
            rec(k + 1);
            auto [u, v] = pairs[k];
            if ((rows[u] & rows[v]) == 0) {
                rows[u] |= std::uint64_t{1} << v;
                rows[v] |= std::uint64_t{1} << u;
                rec(k + 1);
                rows[u] &= ~(std::uint64_t{1} << v);
                rows[v] &= ~(std::uint64_t{1} << u);
            }
        };
        rec(0);
        return labels.size();
    }
}

TEST_CASE("enumeration examples")
{
    CHECK(enumerate_alpha2(0).size() == 1);
    CHECK(enumerate_alpha2(1).size() == 1);
    auto three = enumerate_alpha2(3);
    REQUIRE(three.size() == 3);
    std::multiset<int> sizes;
    for (const Graph & g : three)
        sizes.insert(g.size());
    CHECK(sizes == std::multiset<int>{1, 2, 3});
    CHECK_THROWS_AS(enumerate_alpha2(12), Unsupported);
    CHECK_THROWS_AS(enumerate_alpha2(-1), PreconditionFailed);

    const std::vector<std::size_t> counts{1, 1, 2, 3, 7, 14, 38, 107, 410, 1897};
    for (int n = 0 ; n <= 9 ; ++n) {
        auto graphs = enumerate_alpha2(n, 2);
        CHECK(graphs.size() == counts[n]);
        std::set<std::string> labels;
        for (std::size_t i = 0 ; i < graphs.size() ; ++i) {
            CHECK(independence_number(graphs[i]) <= 2);
            labels.insert(canonical_label(graphs[i]).bytes);
            if (i > 0)
                CHECK(canonical_label(graphs[i - 1]) < canonical_label(graphs[i]));
        }
        CHECK(labels.size() == graphs.size());
    }
}

TEST_CASE("enumeration agrees with brute force up to eight vertices")
{
    for (int n = 1 ; n <= 8 ; ++n) {
        CAPTURE(n);
        CHECK(enumerate_alpha2(n).size() == brute_force_classes(n));
    }
}

TEST_CASE("thread count does not change enumeration")
{
    auto one = enumerate_alpha2(8, 1), four = enumerate_alpha2(8, 4);
    CHECK(one == four);
}

TEST_CASE("min-degree enumeration")
{
    // partitions of n into paths (any length) and cycles (length >= 3)
    const std::vector<std::size_t> counts{1, 1, 2, 4, 7, 11, 19, 29, 46, 70};
    for (int n = 0 ; n <= 9 ; ++n) {
        auto graphs = enumerate_min_degree(n);
        CHECK(graphs.size() == counts[n]);
        std::set<std::string> labels;
        for (const Graph & g : graphs) {
            CHECK(g.order() == n);
            if (n > 0)
                CHECK(min_degree(g) >= n - 3);
            labels.insert(canonical_label(g).bytes);
        }
        CHECK(labels.size() == graphs.size());
    }
}

TEST_CASE("graph6 ingestion")
{
    std::istringstream good("Dhc\n\nA_\n@\n");
    CHECK(ingest_graph6(good).size() == 3);
    std::istringstream bad("Dhc\nA_\nD h\n");
    try {
        ingest_graph6(bad);
        FAIL("expected an error");
    }
    catch (const MalformedGraph6 & e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    fs::path dir = scratch("ingest");
    std::ofstream(dir / "in.g6") << "Dhc\nC~\n";
    CHECK(ingest_graph6_file(dir / "in.g6").size() == 2);
    CHECK_THROWS_AS(ingest_graph6_file(dir / "missing.g6"), Error);
}

TEST_CASE("sweep on the full class up to seven vertices")
{
    SweepOptions options;
    options.n_max = 7;
    options.exact = true;
    options.threads = 2;
    fs::path dir = scratch("sweep7");
    options.cert_dir = dir / "certs";
    SweepReport report = sweep_conjecture(options);
    CHECK(report.rows.size() == 172);
    CHECK(report.violations.empty());
    CHECK(report.inconclusive_count() == 0);
    CHECK(report.exit_code() == exit_clean);
    for (std::size_t i = 0 ; i < report.rows.size() ; ++i) {
        const SweepRow & r = report.rows[i];
        CHECK(r.met);
        CHECK(r.oh_exact);
        CHECK(r.oh >= r.target);
        CHECK(fs::exists(dir / "certs" / r.cert_file));
        if (i > 0)
            CHECK(report.rows[i - 1].label < r.label);
    }
    CHECK(reverify_certificates(report, dir / "certs").empty());

    // corrupt one stored certificate; exactly that row is flagged
    const SweepRow & victim = report.rows[100];
    CertificateFile f = read_certificate_file(dir / "certs" / victim.cert_file);
    REQUIRE(f.certificate.t >= 2);
    f.certificate.connections.pop_back();
    write_certificate_file(dir / "certs" / victim.cert_file, f.graph, f.certificate);
    CHECK(reverify_certificates(report, dir / "certs") == std::vector<std::string>{victim.graph6});
    fs::remove(dir / "certs" / victim.cert_file);
    CHECK(reverify_certificates(report, dir / "certs") == std::vector<std::string>{victim.graph6});
}

TEST_CASE("kite-free sweep")
{
    SweepOptions options;
    options.n_max = 6;
    options.free_of = "kite";
    options.exact = true;
    SweepReport report = sweep_conjecture(options);
    CHECK(report.violations.empty());
    CHECK_FALSE(report.rows.empty());
    for (const SweepRow & r : report.rows) {
        CHECK(r.oh >= (r.invariants.n + 1) / 2);
        CHECK(is_h_free(parse_graph6(r.graph6), pattern("kite")));
    }
}

TEST_CASE("sweep reports are deterministic and well formed")
{
    SweepOptions options;
    options.n_min = 5;
    options.n_max = 8;
    options.threads = 1;
    std::string one = report_csv(sweep_conjecture(options));
    options.threads = 4;
    SweepReport report = sweep_conjecture(options);
    CHECK(report_csv(report) == one);
    std::istringstream lines(one);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "graph6,n,alpha,omega,chi,delta,kappa,oh,target,met,strategy,cert_file,flags");

    fs::path dir = scratch("report");
    write_report(report, dir / "r");
    CHECK(fs::exists(dir / "r.csv"));
    CHECK(fs::exists(dir / "r.json"));
    CHECK(report_json(report).find("\"violations\": 0") != std::string::npos);

    // graph6 strings may contain commas and quotes; fields are quoted
    SweepReport fake;
    fake.rows.push_back(SweepRow{});
    fake.rows[0].graph6 = "A\"b,";
    CHECK(report_csv(fake).find("\"A\"\"b,\"") != std::string::npos);
}

TEST_CASE("sweep input checks and exit codes")
{
    CHECK_THROWS_AS(sweep_graphs({Graph(3)}, {}), PreconditionFailed);
    SweepReport r;
    CHECK(r.exit_code() == exit_clean);
    r.rows.push_back(SweepRow{});
    r.rows[0].inconclusive = true;
    CHECK(r.exit_code() == exit_inconclusive);
    r.violations.push_back({"@", "conjecture", ""});
    CHECK(r.exit_code() == exit_violations);

    SweepOptions tight;
    tight.node_budget = 1;
    SweepReport timeout = sweep_graphs({complement(Graph::cycle(9))}, tight);
    CHECK(timeout.violations.empty());
    CHECK(timeout.inconclusive_count() + static_cast<int>(timeout.rows[0].met) == 1);
}

TEST_CASE("Ramsey sanity at reachable scale")
{
    // R(3,3) = 6: every graph with alpha <= 2 on at least six vertices has a triangle
    for (int n = 6 ; n <= 9 ; ++n)
        for (const Graph & g : enumerate_alpha2(n))
            CHECK(clique_number(g) >= 3);
    // the circulant on Z_13 with distances 1 and 5 is triangle-free with independence number 4,
    // so 13 vertices do not suffice for R(3,5)
    std::vector<Edge> edges;
    for (int i = 0 ; i < 13 ; ++i)
        for (int d : {1, 5})
            edges.push_back({std::min(i, (i + d) % 13), std::max(i, (i + d) % 13)});
    Graph c13 = Graph::from_edges(13, edges);
    CHECK(clique_number(c13) == 2);
    CHECK(independence_number(c13) == 4);
    CHECK(c13.order() == ramsey_3_5 - 1);
    CHECK(ramsey_3_7 - 1 == 22);
}
