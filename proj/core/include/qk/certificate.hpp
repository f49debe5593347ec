#pragma once

#include "qk/digraph.hpp"
#include "qk/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qk {

/// A verified quasi-kernel together with the evidence for it.
///
/// `witnesses[v]` is empty for members of `set`; for every other vertex it is
/// a path [v, q] or [v, u, q] whose arcs exist in the host and whose last
/// entry is in `set`. `bound` is the size bound the producing algorithm
/// guarantees, when one applies.
struct QkCertificate {
    VertexSet set;
    std::vector<std::vector<VertexId>> witnesses;
    std::string algorithm;
    std::optional<Rational> bound;
    /// Free-form diagnostic (e.g. a fallback path was taken).
    std::string note;

    std::size_t size() const noexcept { return set.size(); }
};

/// Builds witnesses for `s`. Throws NotQuasiKernel naming the first
/// offending vertex if `s` is not a quasi-kernel of `d`.
QkCertificate certify(const Digraph& d, const VertexSet& s, std::string algorithm,
                      std::optional<Rational> bound = std::nullopt);

/// Re-checks a certificate against the raw arc set: independence, every
/// witness path well formed, every non-member covered, and the bound.
bool verify_certificate(const Digraph& d, const QkCertificate& cert);

} // namespace qk
