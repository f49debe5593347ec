#pragma once

#include "qk/vertex_set.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qk {

struct Arc {
    VertexId tail = 0;
    VertexId head = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable loopless simple digraph on vertices [0, vertex_count).
///
/// A digon is two distinct arcs (u,v) and (v,u). Arcs are kept sorted by
/// (tail, head); both adjacency directions are stored in CSR form so that
/// neighbourhood spans come out ascending. Optional per-vertex labels
/// (k0, s1_1, gadget names...) ride along but do not take part in equality.
class Digraph {
public:
    Digraph() = default;
    /// Throws InvalidInput on loops, duplicate arcs, or out-of-range endpoints.
    Digraph(std::size_t vertex_count, std::vector<Arc> arcs, std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    std::span<const Arc> arcs() const noexcept { return arcs_; }

    std::span<const VertexId> out_neighbors(VertexId v) const;
    std::span<const VertexId> in_neighbors(VertexId v) const;
    std::size_t out_degree(VertexId v) const { return out_neighbors(v).size(); }
    std::size_t in_degree(VertexId v) const { return in_neighbors(v).size(); }

    bool has_arc(VertexId tail, VertexId head) const;
    /// Joined by an arc in at least one direction.
    bool adjacent(VertexId u, VertexId v) const { return has_arc(u, v) || has_arc(v, u); }

    bool has_labels() const noexcept { return !labels_.empty(); }
    /// The attached label, or the decimal index when none is attached.
    std::string label(VertexId v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Throws InvalidInput if some member of `s` is not a vertex.
    void check_members(const VertexSet& s) const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> out_offsets_;
    std::vector<VertexId> out_targets_;
    std::vector<std::size_t> in_offsets_;
    std::vector<VertexId> in_sources_;
    std::vector<std::string> labels_;
};

// Neighbourhood operators. All results are ascending vertex sets.

/// S(D): vertices with no out-arc.
VertexSet sinks(const Digraph& d);
/// Vertices with no in-arc.
VertexSet sources(const Digraph& d);
/// N^-(S): vertices outside S with an out-neighbour in S.
VertexSet in_set(const Digraph& d, const VertexSet& s);
/// N^+(S): vertices outside S with an in-neighbour in S.
VertexSet out_set(const Digraph& d, const VertexSet& s);
/// N^--(S): vertices outside S and N^-(S) that reach S by exactly two arcs.
VertexSet second_in_set(const Digraph& d, const VertexSet& s);
/// N^-[v] = N^-(v) + v.
VertexSet closed_in_neighborhood(const Digraph& d, VertexId v);
/// N^+[v] = N^+(v) + v.
VertexSet closed_out_neighborhood(const Digraph& d, VertexId v);

bool is_independent(const Digraph& d, const VertexSet& s);
/// Independent, and every vertex reaches S by a directed path of length <= 2.
bool is_quasi_kernel(const Digraph& d, const VertexSet& s);
/// Independent, and every vertex outside S has an out-neighbour in S.
bool is_kernel(const Digraph& d, const VertexSet& s);
/// {v} is a quasi-kernel.
bool is_two_serf(const Digraph& d, VertexId v);
/// Every pair of distinct vertices joined by at least one arc.
bool is_semicomplete(const Digraph& d);
/// No digons.
bool is_orientation(const Digraph& d);
/// Every vertex in L or with an out-neighbour in L.
bool is_dominating_set(const Digraph& d, const VertexSet& l);
bool is_strongly_connected(const Digraph& d);

/// Index association between an induced subdigraph and its parent.
class VertexMap {
public:
    VertexMap() = default;
    explicit VertexMap(std::vector<VertexId> to_parent) : to_parent_(std::move(to_parent)) {}

    VertexId to_parent(VertexId local) const { return to_parent_.at(local); }
    std::optional<VertexId> to_local(VertexId parent) const;
    VertexSet lift(const VertexSet& local) const;
    /// Members of `parent_set` present in the subdigraph, in local indices.
    VertexSet restrict(const VertexSet& parent_set) const;
    std::size_t size() const noexcept { return to_parent_.size(); }

private:
    std::vector<VertexId> to_parent_; // ascending
};

struct InducedSubgraph {
    Digraph graph;
    VertexMap map;
};

/// D[S] with retained old<->new index association. Labels are carried over.
InducedSubgraph induced(const Digraph& d, const VertexSet& s);

/// Same vertex set, arcs reversed.
Digraph reversed(const Digraph& d);
/// Same arcs, vertices renamed by `perm` (old v becomes perm[v]).
Digraph relabeled(const Digraph& d, std::span<const VertexId> perm);

} // namespace qk
