#include "qk/construct.hpp"

#include "qk/error.hpp"

#include <algorithm>

namespace qk {

VertexSet quasi_kernel_rooted(const Digraph& d, VertexId root) {
    const std::size_t n = d.vertex_count();
    if (root >= n) {
        throw InvalidInput("root " + std::to_string(root) + " out of range");
    }

    std::vector<bool> alive(n, true);
    std::vector<VertexId> roots;
    std::size_t remaining = n;
    VertexId scan = 0;
    VertexId r = root;
    while (true) {
        roots.push_back(r);
        alive[r] = false;
        --remaining;
        for (VertexId u : d.in_neighbors(r)) {
            if (alive[u]) {
                alive[u] = false;
                --remaining;
            }
        }
        if (remaining == 0) break;
        while (!alive[scan]) ++scan;
        r = scan;
    }

    // Unwind: later roots live in strictly smaller residual digraphs.
    std::vector<bool> in_q(n, false);
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
        auto out = d.out_neighbors(*it);
        if (std::none_of(out.begin(), out.end(), [&](VertexId w) { return in_q[w]; })) {
            in_q[*it] = true;
        }
    }

    VertexSet q = VertexSet::from_mask(in_q);
    if (!is_quasi_kernel(d, q)) {
        throw VerificationFailure("quasi_kernel_rooted produced a non-quasi-kernel");
    }
    return q;
}

VertexSet quasi_kernel_cl(const Digraph& d) {
    if (d.vertex_count() == 0) {
        return {};
    }
    return quasi_kernel_rooted(d, 0);
}

VertexId two_serf_semicomplete(const Digraph& t) {
    if (t.vertex_count() == 0) {
        throw PreconditionError("two_serf_semicomplete: empty digraph");
    }
    if (!is_semicomplete(t)) {
        throw PreconditionError("two_serf_semicomplete: input is not semicomplete");
    }
    VertexId best = 0;
    for (VertexId v = 1; v < t.vertex_count(); ++v) {
        if (t.in_degree(v) > t.in_degree(best)) {
            best = v;
        }
    }
    if (!is_two_serf(t, best)) {
        throw VerificationFailure("max in-degree vertex is not a 2-serf");
    }
    return best;
}

VertexId dominate_two_serf(const Digraph& t, VertexId v) {
    if (!is_semicomplete(t)) {
        throw PreconditionError("dominate_two_serf: input is not semicomplete");
    }
    if (is_two_serf(t, v)) {
        throw PreconditionError("dominate_two_serf: vertex " + std::to_string(v) + " is already a 2-serf");
    }
    const VertexSet closed_in = closed_in_neighborhood(t, v);
    const VertexSet near = set_union(closed_in, second_in_set(t, VertexSet{v}));
    const VertexSet rest = set_difference(VertexSet::range(t.vertex_count()), near);
    // rest is non-empty: v is not a 2-serf, so some vertex is farther than two.
    auto sub = induced(t, rest);
    const VertexId u = sub.map.to_parent(two_serf_semicomplete(sub.graph));

    if (!is_two_serf(t, u) || !is_subset(closed_in, in_set(t, VertexSet{u}))) {
        throw VerificationFailure("dominate_two_serf postcondition failed");
    }
    return u;
}

} // namespace qk
