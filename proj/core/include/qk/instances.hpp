#pragma once

#include "qk/split_digraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qk {

// Canonical numbering for the extremal families: k_0..k_{2n} take indices
// 0..2n, then s_{ij} (0 <= i <= 2n, 1 <= j <= n) row-major, i.e.
// s_{ij} = 2n + 1 + i*n + (j - 1). Labels are "k<i>" and "s<i>_<j>".

/// Circulant one-way family: k_i -> k_{i+j mod 2n+1} and s_{ij} -> k_i for
/// 1 <= j <= n. One-way, sink-free, 2n^2 + 3n + 1 vertices. Requires n >= 1.
SplitDigraph gen_dn(std::size_t n);

/// gen_dn(n) plus k_0 -> s_{ij} for 1 <= i <= 2n. Not one-way. The s_{0j}
/// receive no arc, so the digraph is strongly connected only once they are
/// removed.
SplitDigraph gen_dpn(std::size_t n);

struct RandomSplitOptions {
    std::uint64_t seed = 0;
    std::size_t clique_size = 0;
    std::size_t independent_size = 0;
    double p_clique_to_independent = 0.3;
    double p_independent_to_clique = 0.5;
    double p_clique_digon = 0.2;
    bool one_way = false;
    bool sink_free = false;
};

/// Deterministic in its options. Sink-freeness is built in: the clique
/// tournament is seeded with a Hamiltonian cycle (a digon when |K| = 2), and
/// every independent vertex gets at least one arc into K. `one_way`
/// suppresses K->I arcs. Throws InvalidInput on unsatisfiable combinations.
SplitDigraph gen_random_split(const RandomSplitOptions& options);

/// Biorientation of a complete split graph: every I-K and K-K pair becomes a
/// digon with probability p_digon, otherwise a uniformly oriented arc. With
/// sink_free, edges around sinks are redrawn, at most 100 rounds.
SplitDigraph gen_random_complete_split(std::uint64_t seed, std::size_t clique_size, std::size_t independent_size,
                                       double p_digon, bool sink_free);

/// Each ordered pair becomes an arc independently with probability p.
Digraph gen_random_digraph(std::uint64_t seed, std::size_t n, double p);

/// Split digraph built from a directed dominating set instance (D, q) so that
/// D has a dominating set of size <= q iff the host has a quasi-kernel of
/// size <= q + 1.
///
/// Host numbering: s = 0; s1_v = 1 + v; s2_i = 1 + n + (i - 1);
/// k1_a = 1 + n + b + rank(a); k2_i = 1 + n + b + m + (i - 1), with source
/// arcs ranked lexicographically by (tail, head) and b = 2q + 3.
struct ReductionArtifact {
    Digraph source;
    SplitDigraph host;
    std::size_t q = 0;
    std::size_t b = 0;
    std::vector<Arc> arc_order; // source arcs in rank order

    VertexId s() const { return 0; }
    VertexId s1(VertexId v) const { return 1 + v; }
    VertexId s2(std::size_t i) const;
    VertexId k1(std::size_t rank) const;
    VertexId k2(std::size_t i) const;
};

/// Throws InvalidInput when q == 0. All count invariants are re-checked.
ReductionArtifact reduce_dds_to_qk(const Digraph& source, std::size_t q);

/// {s} + {s1_v : v in L}. Throws PreconditionError if L is not dominating or
/// |L| > q; the result is verified as a quasi-kernel of the host.
VertexSet lift_domset(const ReductionArtifact& art, const VertexSet& l);

/// {v : s1_v in Q}. Throws PreconditionError if Q is not a quasi-kernel of
/// the host or |Q| > q + 1; the result is verified as a dominating set.
VertexSet project_qk(const ReductionArtifact& art, const VertexSet& q);

} // namespace qk
