#pragma once

#include "qk/certificate.hpp"
#include "qk/split_digraph.hpp"

#include <functional>
#include <limits>
#include <string>

namespace qk {

/// Partition of the independent part of a one-way split digraph by an
/// assigned clique out-neighbour: I_i is contained in N^-(y_i), the classes
/// are pairwise disjoint and cover I.
struct OneWayAssignment {
    static constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();

    std::vector<VertexId> clique;  // y_1..y_|K| ascending
    std::vector<VertexSet> classes; // classes[i] = I_i
    std::vector<std::size_t> owner; // per vertex: class index, or `unassigned` for clique vertices
};

/// Assigns each independent vertex to its smallest-index out-neighbour.
/// Throws PreconditionError if an independent vertex has no out-neighbour.
OneWayAssignment assign_one_way(const SplitDigraph& sd);

/// (n + 3) / 2 - sqrt(n).
double one_way_bound(std::size_t n);
/// Largest integer not exceeding one_way_bound(n), computed exactly.
std::int64_t one_way_bound_floor(std::size_t n);
/// 2n / 3.
Rational two_thirds_bound(std::size_t n);
/// alpha * (|V| + |S(D)| - |N^-(S(D))|).
Rational sink_peeling_bound(const Digraph& d, const Rational& alpha);

/// Quasi-kernel of size at most (n + 3) / 2 - sqrt(n) in a sink-free one-way
/// split digraph (and at most n / 2 once n >= 3).
///
/// The clique is first reduced to a spanning tournament (the arc from the
/// larger to the smaller index is dropped from each digon). A sink of that
/// tournament is returned directly. Otherwise every y_i yields the candidate
/// {y_i} + (union of I_j over out-neighbours y_j of y_i) - N^-(y_i), taken from
/// a dominating 2-serf when y_i is not one itself, and the smallest candidate
/// wins (ties to the smallest i). Throws PreconditionError when the input is
/// not one-way or an independent vertex is a sink. A clique sink is accepted:
/// it is a sink of the tournament and is returned on its own.
QkCertificate one_way_qk(const SplitDigraph& sd);

/// Quasi-kernel of size at most 2n/3 in a sink-free split digraph.
///
/// Greedy maximal K->I matching in ascending arc order, then the better of
/// two candidates built around the matched independent vertices. Throws
/// PreconditionError when the input has a sink (use peel_sinks).
QkCertificate two_thirds_qk(const SplitDigraph& sd);

/// Minimum quasi-kernel of a biorientation of a complete split graph: all
/// sinks if there are any, otherwise a 2-serf or a constructed pair. Throws
/// PreconditionError if the partition is not complete.
QkCertificate complete_split_min_qk(const SplitDigraph& sd);

/// Solver for sink-free induced subdigraphs; returns a quasi-kernel of
/// `sub.graph` in local indices.
using SinkFreeOracle = std::function<VertexSet(const InducedSubgraph& sub)>;

/// Quasi-kernel of size at most alpha * (|V| + |S(D)| - |N^-(S(D))|) obtained
/// by peeling sinks and their in-neighbours and handing sink-free remainders
/// to `oracle`. `oracle` must return quasi-kernels of size at most
/// alpha * |V(sub)| (checked; a violation raises PreconditionError with the
/// subproblem size). Requires alpha >= 1/2.
QkCertificate peel_sinks(const Digraph& d, const SinkFreeOracle& oracle, const Rational& alpha,
                         const std::string& oracle_name = "oracle");

/// peel_sinks with two_thirds_qk on the inherited split partition, alpha = 2/3.
QkCertificate peel_sinks_two_thirds(const SplitDigraph& sd);

} // namespace qk
