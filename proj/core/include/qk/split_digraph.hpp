#pragma once

#include "qk/digraph.hpp"

namespace qk {

/// A digraph together with a validated clique / independent bipartition.
///
/// Only `check_split` builds one, so every instance satisfies: the parts
/// partition the vertex set, every pair in the clique part is adjacent,
/// and no arc has both ends in the independent part.
class SplitDigraph {
public:
    const Digraph& graph() const noexcept { return graph_; }
    const VertexSet& clique_part() const noexcept { return clique_; }
    const VertexSet& independent_part() const noexcept { return independent_; }
    bool in_clique(VertexId v) const { return in_clique_.at(v); }
    std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }

    friend bool operator==(const SplitDigraph& a, const SplitDigraph& b) {
        return a.graph_ == b.graph_ && a.clique_ == b.clique_;
    }

private:
    friend SplitDigraph check_split(Digraph, VertexSet, VertexSet);

    Digraph graph_;
    VertexSet clique_;
    VertexSet independent_;
    std::vector<bool> in_clique_;
};

/// Validates a given partition. Throws InvalidInput naming the violated
/// invariant: non-partition, "missing clique adjacency (u,v)", or
/// "arc inside independent part (u,v)".
SplitDigraph check_split(Digraph d, VertexSet clique, VertexSet independent);
/// Independent part is the complement of `clique`.
SplitDigraph check_split(Digraph d, VertexSet clique);

struct SplitFlags {
    bool one_way = false;        // every independent vertex is a source
    bool complete_split = false; // every independent vertex adjacent to every clique vertex
    bool orientation = false;    // no digons
    bool sink_free = false;

    friend bool operator==(const SplitFlags&, const SplitFlags&) = default;
};

SplitFlags classify(const SplitDigraph& sd);

struct InducedSplit {
    SplitDigraph split;
    VertexMap map;
};

/// Induced subdigraph with the inherited partition.
InducedSplit induced(const SplitDigraph& sd, const VertexSet& s);

} // namespace qk
