#include "oddminor/harness.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace oddminor {

namespace {
    std::string joined(const std::vector<std::string> & parts, char sep)
    {
        std::string out;
        for (const auto & p : parts) {
            if (! out.empty())
                out += sep;
            out += p;
        }
        return out;
    }

    // graph6 characters include '"' and ','; quote like RFC 4180
    std::string csv_field(const std::string & s)
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + '"';
    }
}

std::string report_csv(const SweepReport & report)
{
    std::ostringstream out;
    out << "graph6,n,alpha,omega,chi,delta,kappa,oh,target,met,strategy,cert_file,flags\n";
    for (const SweepRow & r : report.rows) {
        const InvariantReport & i = r.invariants;
        out << csv_field(r.graph6) << ',' << i.n << ',' << i.alpha << ',' << i.omega << ',' << i.chi << ','
            << i.delta << ',' << i.kappa << ',' << r.oh << ',' << r.target << ',' << (r.met ? "true" : "false")
            << ',' << r.strategy << ',' << r.cert_file << ',' << joined(r.flags, ';') << '\n';
    }
    return out.str();
}

std::string report_json(const SweepReport & report)
{
    using nlohmann::json;
    json rows = json::array();
    int met = 0, fallback = 0;
    for (const SweepRow & r : report.rows) {
        const InvariantReport & i = r.invariants;
        met += r.met;
        fallback += r.strategy == "search";
        rows.push_back({{"graph6", r.graph6}, {"label", r.label.hex()}, {"n", i.n}, {"alpha", i.alpha},
                {"omega", i.omega}, {"chi", i.chi}, {"delta", i.delta}, {"kappa", i.kappa}, {"oh", r.oh},
                {"oh_exact", r.oh_exact}, {"target", r.target}, {"met", r.met}, {"inconclusive", r.inconclusive},
                {"strategy", r.strategy}, {"cert_file", r.cert_file}, {"flags", r.flags}});
    }
    json violations = json::array();
    for (const auto & v : report.violations)
        violations.push_back({{"graph6", v.graph6}, {"claim", v.claim}, {"detail", v.detail}});
    json j{{"summary", {{"graphs", report.rows.size()}, {"met", met}, {"search_fallback", fallback},
                {"violations", report.violations.size()}, {"inconclusive", report.inconclusive_count()}}},
            {"rows", rows}, {"violations", violations}};
    return j.dump(1);
}

void write_report(const SweepReport & report, const std::filesystem::path & base)
{
    for (auto [ext, text] : {std::pair{".csv", report_csv(report)}, std::pair{".json", report_json(report)}}) {
        std::filesystem::path p = base;
        p += ext;
        std::ofstream out(p);
        if (! out)
            throw Error("cannot write " + p.string());
        out << text;
    }
}

} // namespace oddminor
