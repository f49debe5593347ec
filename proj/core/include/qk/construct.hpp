#pragma once

#include "qk/digraph.hpp"

namespace qk {

/// Quasi-kernel Q with `root` in Q or some out-neighbour of `root` in Q.
///
/// Peels N^-[r] for r = root, then for the smallest remaining vertex, until
/// nothing is left; unwinding adds each peeled root unless one of its
/// out-neighbours was already taken. Iterative, so depth is not bounded by
/// the call stack. The result is post-verified.
VertexSet quasi_kernel_rooted(const Digraph& d, VertexId root);

/// quasi_kernel_rooted from the smallest vertex (empty set on the empty digraph).
VertexSet quasi_kernel_cl(const Digraph& d);

/// A 2-serf of a semicomplete digraph: a vertex of maximum in-degree,
/// ties to the smallest index. Throws PreconditionError if `t` is not
/// semicomplete or empty.
VertexId two_serf_semicomplete(const Digraph& t);

/// For a vertex v that is not a 2-serf of the semicomplete digraph `t`,
/// a 2-serf u with N^-[v] contained in N^-(u). Throws PreconditionError if
/// v already is a 2-serf.
VertexId dominate_two_serf(const Digraph& t, VertexId v);

} // namespace qk
