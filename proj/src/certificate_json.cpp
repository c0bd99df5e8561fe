#include "oddminor/certificate_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oddminor/graph6.hpp"

namespace oddminor {

using nlohmann::json;

std::string certificate_to_json(const Graph & g, const OddExpansionCertificate & c)
{
    json j;
    j["n"] = g.order();
    j["graph6"] = to_graph6(g);
    j["t"] = c.t;
    j["branches"] = json::array();
    for (const auto & b : c.branches) {
        json edges = json::array();
        for (auto e : b.tree_edges)
            edges.push_back({e.u, e.v});
        j["branches"].push_back({{"vertices", b.vertices}, {"tree_edges", edges}});
    }
    j["colors"] = json::object();
    for (auto [v, col] : c.colors)
        j["colors"][std::to_string(v)] = col;
    j["connections"] = json::array();
    for (const auto & conn : c.connections)
        j["connections"].push_back({conn.branch_a, conn.branch_b, conn.edge.u, conn.edge.v});
    return j.dump();
}

namespace {
    void only_fields(const json & j, std::set<std::string> allowed, const char * where)
    {
        if (! j.is_object())
            throw MalformedCertificate(std::string(where) + " must be an object");
        for (auto it = j.begin() ; it != j.end() ; ++it)
            if (! allowed.contains(it.key()))
                throw MalformedCertificate("unknown field \"" + it.key() + "\" in " + where);
        for (const auto & name : allowed)
            if (! j.contains(name))
                throw MalformedCertificate("missing field \"" + name + "\" in " + where);
    }

    int as_int(const json & j, const char * what)
    {
        if (! j.is_number_integer())
            throw MalformedCertificate(std::string(what) + " must be an integer");
        return j.get<int>();
    }

    Edge as_edge(const json & j)
    {
        if (! j.is_array() || j.size() != 2)
            throw MalformedCertificate("tree edge must be a pair");
        return {as_int(j[0], "edge endpoint"), as_int(j[1], "edge endpoint")};
    }
}

CertificateFile certificate_from_json(const std::string & text)
{
    json j;
    try {
        j = json::parse(text);
    }
    catch (const json::parse_error & e) {
        throw MalformedCertificate(std::string("invalid JSON: ") + e.what());
    }
    only_fields(j, {"n", "graph6", "t", "branches", "colors", "connections"}, "certificate");

    if (! j["graph6"].is_string())
        throw MalformedCertificate("graph6 must be a string");
    Graph g = parse_graph6(j["graph6"].get<std::string>());
    if (as_int(j["n"], "n") != g.order())
        throw MalformedCertificate("n does not match the graph6 vertex count");

    OddExpansionCertificate c;
    c.t = as_int(j["t"], "t");

    if (! j["branches"].is_array())
        throw MalformedCertificate("branches must be an array");
    for (const auto & jb : j["branches"]) {
        only_fields(jb, {"vertices", "tree_edges"}, "branch");
        if (! jb["vertices"].is_array() || ! jb["tree_edges"].is_array())
            throw MalformedCertificate("branch vertices and tree_edges must be arrays");
        BranchTree b;
        for (const auto & v : jb["vertices"])
            b.vertices.push_back(as_int(v, "branch vertex"));
        for (const auto & e : jb["tree_edges"])
            b.tree_edges.push_back(as_edge(e));
        c.branches.push_back(std::move(b));
    }

    if (! j["colors"].is_object())
        throw MalformedCertificate("colors must be an object");
    for (auto it = j["colors"].begin() ; it != j["colors"].end() ; ++it) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(it.key(), &used);
        }
        catch (const std::exception &) {
            throw MalformedCertificate("colour key \"" + it.key() + "\" is not a vertex index");
        }
        if (used != it.key().size())
            throw MalformedCertificate("colour key \"" + it.key() + "\" is not a vertex index");
        c.colors[v] = as_int(it.value(), "colour");
    }

    if (! j["connections"].is_array())
        throw MalformedCertificate("connections must be an array");
    for (const auto & jc : j["connections"]) {
        if (! jc.is_array() || jc.size() != 4)
            throw MalformedCertificate("connection must be [i, j, u, v]");
        c.connections.push_back({as_int(jc[0], "branch index"), as_int(jc[1], "branch index"),
                {as_int(jc[2], "vertex"), as_int(jc[3], "vertex")}});
    }
    return {std::move(g), std::move(c)};
}

void write_certificate_file(const std::filesystem::path & path, const Graph & g, const OddExpansionCertificate & c)
{
    std::ofstream out(path);
    if (! out)
        throw Error("cannot write " + path.string());
    out << certificate_to_json(g, c) << '\n';
}

CertificateFile read_certificate_file(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (! in)
        throw Error("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return certificate_from_json(ss.str());
}

} // namespace oddminor
