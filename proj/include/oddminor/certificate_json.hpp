#ifndef ODDMINOR_CERTIFICATE_JSON_HPP
#define ODDMINOR_CERTIFICATE_JSON_HPP

#include <filesystem>
#include <string>

#include "oddminor/expansion.hpp"

namespace oddminor {

/// A certificate together with the graph it refers to, as stored on disk.
struct CertificateFile
{
    Graph graph;
    OddExpansionCertificate certificate;
};

/// {"n", "graph6", "t", "branches": [{"vertices", "tree_edges"}], "colors": {"v": c},
///  "connections": [[i, j, u, v]]}. Unknown or missing fields throw MalformedCertificate.
std::string certificate_to_json(const Graph & g, const OddExpansionCertificate & c);
CertificateFile certificate_from_json(const std::string & text);

void write_certificate_file(const std::filesystem::path & path, const Graph & g, const OddExpansionCertificate & c);
CertificateFile read_certificate_file(const std::filesystem::path & path);

} // namespace oddminor

#endif
