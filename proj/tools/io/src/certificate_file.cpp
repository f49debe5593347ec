#include "qk/io/certificate_file.hpp"

#include "qk/error.hpp"

#include "json.hpp"

namespace qk::io {

using nlohmann::json;

std::string format_certificate(const CertificateFile& file) {
    const QkCertificate& cert = file.certificate;
    json doc;
    doc["algorithm"] = cert.algorithm;
    doc["set"] = std::vector<VertexId>(cert.set.begin(), cert.set.end());
    doc["size"] = cert.set.size();
    json paths = json::array();
    for (const auto& path : cert.witnesses) {
        if (!path.empty()) paths.push_back(path);
    }
    doc["witnesses"] = std::move(paths);
    doc["bound"] = cert.bound ? json(cert.bound->to_string()) : json(nullptr);
    doc["optimal"] = file.optimal;
    doc["verified"] = file.verified;
    doc["instance_digest"] = file.instance_digest;
    if (!cert.note.empty()) doc["note"] = cert.note;
    return doc.dump(2) + "\n";
}

CertificateFile parse_certificate(const std::string& text, std::size_t vertex_count) {
    CertificateFile file;
    try {
        const json doc = json::parse(text);
        QkCertificate& cert = file.certificate;
        cert.algorithm = doc.at("algorithm").get<std::string>();
        cert.set = VertexSet(doc.at("set").get<std::vector<VertexId>>());
        cert.witnesses.assign(vertex_count, {});
        for (const auto& path : doc.at("witnesses")) {
            auto p = path.get<std::vector<VertexId>>();
            if (p.empty() || p.front() >= vertex_count || !cert.witnesses[p.front()].empty()) {
                throw InvalidInput("certificate: malformed or repeated witness path");
            }
            cert.witnesses[p.front()] = std::move(p);
        }
        if (!doc.at("bound").is_null()) {
            cert.bound = Rational::parse(doc.at("bound").get<std::string>());
        }
        if (doc.contains("note")) cert.note = doc.at("note").get<std::string>();
        file.optimal = doc.at("optimal").get<bool>();
        file.verified = doc.at("verified").get<bool>();
        file.instance_digest = doc.at("instance_digest").get<std::string>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("certificate: ") + e.what());
    }
    return file;
}

} // namespace qk::io
