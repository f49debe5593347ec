#include "qk/error.hpp"
#include "qk/instances.hpp"

namespace qk {

VertexId ReductionArtifact::s2(std::size_t i) const {
    return static_cast<VertexId>(1 + source.vertex_count() + (i - 1));
}

VertexId ReductionArtifact::k1(std::size_t rank) const {
    return static_cast<VertexId>(1 + source.vertex_count() + b + rank);
}

VertexId ReductionArtifact::k2(std::size_t i) const {
    return static_cast<VertexId>(1 + source.vertex_count() + b + arc_order.size() + (i - 1));
}

ReductionArtifact reduce_dds_to_qk(const Digraph& source, std::size_t q) {
    if (q == 0) {
        throw InvalidInput("reduction parameter q must be positive");
    }
    ReductionArtifact art;
    art.source = source;
    art.q = q;
    art.b = 2 * q + 3;
    art.arc_order.assign(source.arcs().begin(), source.arcs().end()); // already (tail, head) sorted

    const std::size_t n = source.vertex_count();
    const std::size_t m = art.arc_order.size();
    const std::size_t b = art.b;
    const std::size_t total = n + m + 2 * b + 1;

    std::vector<std::string> labels(total);
    labels[art.s()] = "s";
    for (VertexId v = 0; v < n; ++v) labels[art.s1(v)] = "s1_" + std::to_string(v);
    for (std::size_t i = 1; i <= b; ++i) {
        labels[art.s2(i)] = "s2_" + std::to_string(i);
        labels[art.k2(i)] = "k2_" + std::to_string(i);
    }
    for (std::size_t r = 0; r < m; ++r) {
        const Arc& a = art.arc_order[r];
        labels[art.k1(r)] = "k1_" + std::to_string(a.tail) + "_" + std::to_string(a.head);
    }

    std::vector<Arc> arcs;
    for (std::size_t r = 0; r < m; ++r) {
        const Arc& a = art.arc_order[r];
        arcs.push_back({art.s(), art.k1(r)});
        arcs.push_back({art.s1(a.tail), art.k1(r)});
        arcs.push_back({art.k1(r), art.s1(a.head)});
        for (std::size_t later = r + 1; later < m; ++later) {
            arcs.push_back({art.k1(r), art.k1(later)});
        }
        for (std::size_t l = 1; l <= b; ++l) {
            arcs.push_back({art.k1(r), art.k2(l)});
        }
    }
    for (std::size_t i = 1; i <= b; ++i) {
        arcs.push_back({art.k2(i), art.s()});
        arcs.push_back({art.s2(i), art.k2(i)});
        for (std::size_t j = i + 1; j <= b; ++j) {
            // same parity: i -> j; different parity: j -> i
            if (i % 2 == j % 2) arcs.push_back({art.k2(i), art.k2(j)});
            else arcs.push_back({art.k2(j), art.k2(i)});
        }
    }

    std::vector<VertexId> clique;
    for (std::size_t r = 0; r < m; ++r) clique.push_back(art.k1(r));
    for (std::size_t i = 1; i <= b; ++i) clique.push_back(art.k2(i));
    art.host = check_split(Digraph(total, std::move(arcs), std::move(labels)), VertexSet(std::move(clique)));

    const std::size_t mb = m + b;
    if (art.host.vertex_count() != n + m + 2 * b + 1 ||
        art.host.graph().arc_count() != mb * (mb - 1) / 2 + 3 * m + 2 * b ||
        !is_orientation(art.host.graph())) {
        throw VerificationFailure("reduce_dds_to_qk: gadget count invariants violated");
    }
    return art;
}

VertexSet lift_domset(const ReductionArtifact& art, const VertexSet& l) {
    art.source.check_members(l);
    if (!is_dominating_set(art.source, l)) {
        throw PreconditionError("lift_domset: set is not dominating in the source digraph");
    }
    if (l.size() > art.q) {
        throw PreconditionError("lift_domset: dominating set larger than q");
    }
    std::vector<VertexId> q{art.s()};
    for (VertexId v : l) q.push_back(art.s1(v));
    VertexSet result(std::move(q));
    if (!is_quasi_kernel(art.host.graph(), result)) {
        throw VerificationFailure("lift_domset: lifted set is not a quasi-kernel");
    }
    return result;
}

VertexSet project_qk(const ReductionArtifact& art, const VertexSet& q) {
    if (q.size() > art.q + 1) {
        throw PreconditionError("project_qk: quasi-kernel larger than q + 1");
    }
    if (!is_quasi_kernel(art.host.graph(), q)) {
        throw PreconditionError("project_qk: set is not a quasi-kernel of the host");
    }
    std::vector<VertexId> l;
    for (VertexId v = 0; v < art.source.vertex_count(); ++v) {
        if (q.contains(art.s1(v))) l.push_back(v);
    }
    VertexSet result = VertexSet::from_sorted(std::move(l));
    if (result.size() > art.q || !is_dominating_set(art.source, result)) {
        throw VerificationFailure("project_qk: projection is not a dominating set of size <= q");
    }
    return result;
}

} // namespace qk
