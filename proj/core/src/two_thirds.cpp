#include "qk/construct.hpp"
#include "qk/error.hpp"
#include "qk/split.hpp"

#include <algorithm>
#include <optional>

namespace qk {

Rational two_thirds_bound(std::size_t n) {
    return Rational(2 * static_cast<std::int64_t>(n), 3);
}

namespace {

struct Matching {
    VertexSet matched_clique;      // K_M
    VertexSet matched_independent; // I_M
};

// Inclusion-maximal matching of K->I arcs, scanned in ascending (tail, head) order.
Matching greedy_matching(const SplitDigraph& sd) {
    const Digraph& d = sd.graph();
    std::vector<bool> used(d.vertex_count(), false);
    for (const Arc& a : d.arcs()) {
        if (sd.in_clique(a.tail) && !sd.in_clique(a.head) && !used[a.tail] && !used[a.head]) {
            used[a.tail] = used[a.head] = true;
        }
    }
    std::vector<bool> km(d.vertex_count(), false);
    std::vector<bool> im(d.vertex_count(), false);
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (used[v]) (sd.in_clique(v) ? km : im)[v] = true;
    }
    return {VertexSet::from_mask(km), VertexSet::from_mask(im)};
}

bool has_arc_between(const Digraph& d, const VertexSet& from, const VertexSet& to) {
    auto target = to.mask(d.vertex_count());
    for (VertexId u : from) {
        for (VertexId v : d.out_neighbors(u)) {
            if (target[v]) return true;
        }
    }
    return false;
}

} // namespace

QkCertificate two_thirds_qk(const SplitDigraph& sd) {
    const Digraph& d = sd.graph();
    const std::size_t n = d.vertex_count();
    if (!sinks(d).empty()) {
        throw PreconditionError("has a sink: use two-thirds via sink peeling");
    }
    const Rational bound = two_thirds_bound(n);
    const VertexSet all = VertexSet::range(n);
    const VertexSet& clique = sd.clique_part();
    const VertexSet& indep = sd.independent_part();

    const Matching m = greedy_matching(sd);
    const VertexSet& im = m.matched_independent;
    if (has_arc_between(d, set_difference(clique, m.matched_clique), set_difference(indep, im))) {
        throw VerificationFailure("two_thirds_qk: matching is not maximal");
    }

    const VertexSet in_im = in_set(d, im);                               // N^-(I_M)
    const VertexSet second_im = set_intersection(second_in_set(d, im), indep); // N^--(I_M) within I
    const VertexSet a = set_union(set_union(im, in_im), second_im);
    const VertexSet b = set_difference(all, a);
    if (b.size() <= 1) {
        return certify(d, im, "two-thirds", bound);
    }
    const VertexSet b_clique = set_intersection(b, clique);
    const VertexSet b_indep = set_intersection(b, indep);
    if (has_arc_between(d, b_clique, indep)) {
        throw VerificationFailure("two_thirds_qk: arc from B∩K into I");
    }

    // Candidate Q: solve D[B] (one-way by the check above) and extend.
    VertexSet q1;
    {
        auto sub = induced(sd, b);
        const VertexSet sub_sinks = sinks(sub.split.graph());
        if (!sub_sinks.empty()) {
            const VertexId v = sub.map.to_parent(sub_sinks.front());
            if (!sd.in_clique(v)) {
                throw VerificationFailure("two_thirds_qk: D[B] has an independent sink");
            }
            q1 = VertexSet{v};
        } else {
            q1 = sub.map.lift(one_way_qk(sub.split).set);
        }
    }
    const VertexSet q = set_difference(set_union(set_union(q1, im), second_im), in_set(d, q1));

    // Candidate Q'.
    VertexSet q_prime;
    const auto in_im_mask = in_im.mask(n);
    std::optional<VertexId> lonely;
    for (VertexId v : b_clique) {
        auto out = d.out_neighbors(v);
        if (std::none_of(out.begin(), out.end(), [&](VertexId w) { return in_im_mask[w]; })) {
            lonely = v;
            break;
        }
    }
    if (!lonely) {
        q_prime = set_union(im, b_indep);
    } else {
        VertexId v = *lonely;
        auto kd = induced(d, clique);
        const VertexId local = *kd.map.to_local(v);
        if (!is_two_serf(kd.graph, local)) {
            v = kd.map.to_parent(dominate_two_serf(kd.graph, local));
            if (!b_clique.contains(v)) {
                throw VerificationFailure("two_thirds_qk: dominating 2-serf left B∩K");
            }
        }
        const VertexSet dropped = set_union(second_im, in_set(d, VertexSet{v}));
        q_prime = set_union(VertexSet{v}, set_difference(indep, dropped));
    }

    const VertexSet& chosen = q_prime.size() < q.size() ? q_prime : q;
    return certify(d, chosen, "two-thirds", bound);
}

} // namespace qk
