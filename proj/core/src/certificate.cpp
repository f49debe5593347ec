#include "qk/certificate.hpp"

#include "qk/error.hpp"

namespace qk {

QkCertificate certify(const Digraph& d, const VertexSet& s, std::string algorithm,
                      std::optional<Rational> bound) {
    d.check_members(s);
    const std::size_t n = d.vertex_count();
    auto member = s.mask(n);

    for (VertexId v : s) {
        for (VertexId u : d.out_neighbors(v)) {
            if (member[u]) {
                throw NotQuasiKernel(v, "not independent: arc (" + std::to_string(v) + "," +
                                            std::to_string(u) + ") joins two members");
            }
        }
    }

    QkCertificate cert;
    cert.set = s;
    cert.algorithm = std::move(algorithm);
    cert.bound = bound;
    cert.witnesses.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        if (member[v]) continue;
        auto& path = cert.witnesses[v];
        for (VertexId q : d.out_neighbors(v)) {
            if (member[q]) {
                path = {v, q};
                break;
            }
        }
        if (!path.empty()) continue;
        for (VertexId u : d.out_neighbors(v)) {
            for (VertexId q : d.out_neighbors(u)) {
                if (member[q]) {
                    path = {v, u, q};
                    break;
                }
            }
            if (!path.empty()) break;
        }
        if (path.empty()) {
            throw NotQuasiKernel(v, "vertex " + std::to_string(v) + " has no path of length at most two into the set");
        }
    }
    if (cert.bound && !at_most(static_cast<std::int64_t>(s.size()), *cert.bound)) {
        throw VerificationFailure(cert.algorithm + ": size " + std::to_string(s.size()) +
                                  " exceeds bound " + cert.bound->to_string());
    }
    return cert;
}

bool verify_certificate(const Digraph& d, const QkCertificate& cert) {
    const std::size_t n = d.vertex_count();
    for (VertexId v : cert.set) {
        if (v >= n) return false;
    }
    if (!is_independent(d, cert.set) || cert.witnesses.size() != n) {
        return false;
    }
    auto member = cert.set.mask(n);
    for (VertexId v = 0; v < n; ++v) {
        const auto& path = cert.witnesses[v];
        if (member[v]) {
            if (!path.empty()) return false;
            continue;
        }
        if (path.size() < 2 || path.size() > 3 || path.front() != v || !member[path.back()]) {
            return false;
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (!d.has_arc(path[i], path[i + 1])) return false;
        }
    }
    if (cert.bound && !at_most(static_cast<std::int64_t>(cert.set.size()), *cert.bound)) {
        return false;
    }
    return true;
}

} // namespace qk
