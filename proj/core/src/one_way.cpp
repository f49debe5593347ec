#include "qk/construct.hpp"
#include "qk/error.hpp"
#include "qk/split.hpp"

#include <cmath>

namespace qk {

double one_way_bound(std::size_t n) {
    const double x = static_cast<double>(n);
    return (x + 3.0) / 2.0 - std::sqrt(x);
}

std::int64_t one_way_bound_floor(std::size_t n) {
    // b <= (n+3)/2 - sqrt(n)  <=>  n + 3 - 2b >= 0  and  (n + 3 - 2b)^2 >= 4n
    const auto nn = static_cast<std::int64_t>(n);
    std::int64_t b = (nn + 3) / 2;
    while (true) {
        const std::int64_t gap = nn + 3 - 2 * b;
        if (gap >= 0 && gap * gap >= 4 * nn) return b;
        --b;
    }
}

OneWayAssignment assign_one_way(const SplitDigraph& sd) {
    const Digraph& d = sd.graph();
    OneWayAssignment a;
    a.clique.assign(sd.clique_part().begin(), sd.clique_part().end());
    a.owner.assign(d.vertex_count(), OneWayAssignment::unassigned);
    std::vector<std::vector<VertexId>> classes(a.clique.size());
    for (VertexId s : sd.independent_part()) {
        auto out = d.out_neighbors(s);
        if (out.empty()) {
            throw PreconditionError("independent vertex " + std::to_string(s) + " is a sink");
        }
        // out-neighbours of an independent vertex all lie in the clique part
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(a.clique.begin(), a.clique.end(), out.front()) - a.clique.begin());
        a.owner[s] = pos;
        classes[pos].push_back(s);
    }
    for (auto& c : classes) {
        a.classes.push_back(VertexSet::from_sorted(std::move(c)));
    }
    return a;
}

namespace {

// Spanning tournament of the clique: keep the lower->higher arc of each digon.
Digraph spanning_tournament(const Digraph& clique) {
    std::vector<Arc> arcs;
    for (const Arc& a : clique.arcs()) {
        if (a.tail < a.head || !clique.has_arc(a.head, a.tail)) {
            arcs.push_back(a);
        }
    }
    return Digraph(clique.vertex_count(), std::move(arcs));
}

} // namespace

QkCertificate one_way_qk(const SplitDigraph& sd) {
    const Digraph& d = sd.graph();
    const SplitFlags flags = classify(sd);
    if (!flags.one_way) {
        throw PreconditionError("not a one-way split digraph");
    }
    for (VertexId s : sd.independent_part()) {
        if (d.out_degree(s) == 0) {
            throw PreconditionError("has a sink: independent vertex " + std::to_string(s) + " has no out-arc");
        }
    }
    const std::size_t n = d.vertex_count();
    const Rational bound(one_way_bound_floor(n));
    if (n == 0) {
        return certify(d, {}, "one-way", bound);
    }

    auto clique = induced(d, sd.clique_part());
    const Digraph tournament = spanning_tournament(clique.graph);
    if (auto tsinks = sinks(tournament); !tsinks.empty()) {
        return certify(d, VertexSet{clique.map.to_parent(tsinks.front())}, "one-way", bound);
    }

    const OneWayAssignment assignment = assign_one_way(sd);
    const std::size_t k = assignment.clique.size();

    auto candidate_for = [&](VertexId i) {
        std::vector<bool> in_q(n, false);
        in_q[assignment.clique[i]] = true;
        for (VertexId j : tournament.out_neighbors(i)) {
            for (VertexId s : assignment.classes[j]) {
                in_q[s] = true;
            }
        }
        for (VertexId u : d.in_neighbors(assignment.clique[i])) {
            in_q[u] = false;
        }
        return VertexSet::from_mask(in_q);
    };

    VertexSet best;
    bool have_best = false;
    for (VertexId i = 0; i < k; ++i) {
        const VertexId source = is_two_serf(tournament, i) ? i : dominate_two_serf(tournament, i);
        VertexSet q = candidate_for(source);

        std::size_t weight = 1;
        for (VertexId j : tournament.out_neighbors(i)) {
            weight += assignment.classes[j].size();
        }
        if (q.size() > weight) {
            throw VerificationFailure("one_way_qk: candidate " + std::to_string(i) +
                                      " exceeds its out-class weight");
        }
        if (!have_best || q.size() < best.size()) {
            best = std::move(q);
            have_best = true;
        }
    }

    QkCertificate cert = certify(d, best, "one-way", bound);
    if (n >= 3 && 2 * cert.size() > n) {
        throw VerificationFailure("one_way_qk: size exceeds n/2");
    }
    return cert;
}

} // namespace qk
