#pragma once

#include "qk/certificate.hpp"

#include <string>

namespace qk::io {

// JSON certificate document:
//
//   {
//     "algorithm": "two-thirds",
//     "set": [0, 4],
//     "size": 2,
//     "witnesses": [[1, 2, 0], [2, 0], ...],   one path per non-member, ascending start
//     "bound": "4/1" | null,
//     "optimal": false,
//     "verified": true,
//     "instance_digest": "fnv1a64:...",
//     "note": "..."                            only when non-empty
//   }
struct CertificateFile {
    QkCertificate certificate;
    bool verified = false;
    bool optimal = false;
    std::string instance_digest;
};

std::string format_certificate(const CertificateFile& file);
/// Throws InvalidInput on malformed documents. `vertex_count` sizes the
/// witness table.
CertificateFile parse_certificate(const std::string& text, std::size_t vertex_count);

} // namespace qk::io
