#ifndef ODDMINOR_HARNESS_HPP
#define ODDMINOR_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oddminor/canonical.hpp"
#include "oddminor/graph.hpp"
#include "oddminor/invariants.hpp"

namespace oddminor {

/// R(3,5) and R(3,7): every graph on that many vertices has a triangle or an independent set of 5 (7).
inline constexpr int ramsey_3_5 = 14;
inline constexpr int ramsey_3_7 = 23;

inline constexpr int enumerate_max_order = 11;

/// One canonical representative per isomorphism class of graphs on n vertices with alpha <= 2,
/// sorted by canonical label. Built as complements of triangle-free graphs by orderly extension.
/// Throws Unsupported for n > enumerate_max_order.
std::vector<Graph> enumerate_alpha2(int n, int threads = 1);

/// Triangle-free graphs on n vertices, one canonical form per class, sorted by label.
std::vector<Graph> enumerate_triangle_free(int n, int threads = 1);

/// Graphs with minimum degree >= n - 3: complements of disjoint unions of paths and cycles.
/// One graph per isomorphism class, in generation order.
std::vector<Graph> enumerate_min_degree(int n);

/// One graph per nonblank line. Throws MalformedGraph6 naming the 1-based line.
std::vector<Graph> ingest_graph6_file(const std::filesystem::path & path);
std::vector<Graph> ingest_graph6(std::istream & in);

struct SweepOptions
{
    int n_min = 1;
    int n_max = 7;
    /// Compute the exact odd Hadwiger number (search proves absence one above).
    bool exact = false;
    /// 0 means available parallelism.
    int threads = 0;
    std::uint64_t node_budget = 100'000'000;
    /// Certificates are written here as <label hex>.json when set.
    std::optional<std::filesystem::path> cert_dir;
    /// Keep only graphs free of this pattern.
    std::optional<std::string> free_of;
};

struct SweepRow
{
    std::string graph6;
    CanonicalLabel label;
    InvariantReport invariants;
    /// Certified lower bound, exact when oh_exact.
    int oh = 0;
    bool oh_exact = false;
    /// ceil(n / alpha)
    int target = 0;
    bool met = false;
    bool inconclusive = false;
    std::string strategy;
    std::string cert_file;
    std::vector<std::string> flags;
};

struct SweepViolation
{
    std::string graph6;
    std::string claim;
    std::string detail;
};

struct SweepReport
{
    std::vector<SweepRow> rows;
    std::vector<SweepViolation> violations;

    int inconclusive_count() const;
    /// 0 clean, 1 violations, 2 inconclusive rows.
    int exit_code() const;
};

inline constexpr int exit_clean = 0;
inline constexpr int exit_violations = 1;
inline constexpr int exit_inconclusive = 2;
inline constexpr int exit_input_error = 3;

/// Rows sorted by canonical label. Throws PreconditionFailed for a graph with alpha > 2.
SweepReport sweep_graphs(const std::vector<Graph> & graphs, const SweepOptions & options);
SweepReport sweep_conjecture(const SweepOptions & options);

/// Rows whose stored certificate is missing, unreadable, for a different graph, fails
/// verification, or is below the row's recorded order.
std::vector<std::string> reverify_certificates(const SweepReport & report, const std::filesystem::path & cert_dir);

std::string report_csv(const SweepReport & report);
std::string report_json(const SweepReport & report);
/// Writes <base>.csv and <base>.json.
void write_report(const SweepReport & report, const std::filesystem::path & base);

/// 0 maps to the available hardware parallelism.
int resolve_threads(int requested);

} // namespace oddminor

#endif
