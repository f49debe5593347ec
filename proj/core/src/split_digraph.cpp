#include "qk/split_digraph.hpp"

#include "qk/error.hpp"

namespace qk {

SplitDigraph check_split(Digraph d, VertexSet clique, VertexSet independent) {
    d.check_members(clique);
    d.check_members(independent);
    if (intersects(clique, independent) || clique.size() + independent.size() != d.vertex_count()) {
        throw InvalidInput("clique and independent parts do not partition the vertex set");
    }
    const std::vector<VertexId> k(clique.begin(), clique.end());
    for (std::size_t i = 0; i < k.size(); ++i) {
        for (std::size_t j = i + 1; j < k.size(); ++j) {
            if (!d.adjacent(k[i], k[j])) {
                throw InvalidInput("missing clique adjacency (" + std::to_string(k[i]) + "," +
                                   std::to_string(k[j]) + ")");
            }
        }
    }
    auto in_i = independent.mask(d.vertex_count());
    for (const Arc& a : d.arcs()) {
        if (in_i[a.tail] && in_i[a.head]) {
            throw InvalidInput("arc inside independent part (" + std::to_string(a.tail) + "," +
                               std::to_string(a.head) + ")");
        }
    }
    SplitDigraph sd;
    sd.in_clique_ = clique.mask(d.vertex_count());
    sd.graph_ = std::move(d);
    sd.clique_ = std::move(clique);
    sd.independent_ = std::move(independent);
    return sd;
}

SplitDigraph check_split(Digraph d, VertexSet clique) {
    d.check_members(clique);
    VertexSet independent = set_difference(VertexSet::range(d.vertex_count()), clique);
    return check_split(std::move(d), std::move(clique), std::move(independent));
}

SplitFlags classify(const SplitDigraph& sd) {
    const Digraph& d = sd.graph();
    SplitFlags flags;
    flags.one_way = true;
    flags.complete_split = true;
    for (VertexId s : sd.independent_part()) {
        if (d.in_degree(s) != 0) {
            flags.one_way = false;
        }
        for (VertexId k : sd.clique_part()) {
            if (!d.adjacent(s, k)) {
                flags.complete_split = false;
            }
        }
    }
    flags.orientation = is_orientation(d);
    flags.sink_free = sinks(d).empty();
    return flags;
}

InducedSplit induced(const SplitDigraph& sd, const VertexSet& s) {
    auto sub = induced(sd.graph(), s);
    VertexSet clique = sub.map.restrict(sd.clique_part());
    return {check_split(std::move(sub.graph), std::move(clique)), std::move(sub.map)};
}

} // namespace qk
