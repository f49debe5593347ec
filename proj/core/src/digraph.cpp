#include "qk/digraph.hpp"

#include "qk/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace qk {

namespace {

std::string arc_text(VertexId u, VertexId v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

// Distance from every vertex to `s` along directed paths, capped at 3
// (3 meaning "more than two").
std::vector<std::uint8_t> distance_to_set(const Digraph& d, const VertexSet& s) {
    std::vector<std::uint8_t> dist(d.vertex_count(), 3);
    std::vector<VertexId> frontier;
    for (VertexId v : s) {
        dist[v] = 0;
        frontier.push_back(v);
    }
    for (std::uint8_t level = 1; level <= 2; ++level) {
        std::vector<VertexId> next;
        for (VertexId v : frontier) {
            for (VertexId u : d.in_neighbors(v)) {
                if (dist[u] == 3) {
                    dist[u] = level;
                    next.push_back(u);
                }
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

} // namespace

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs, std::vector<std::string> labels)
    : n_(vertex_count), arcs_(std::move(arcs)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n_) {
        throw InvalidInput("label table size does not match vertex count");
    }
    for (const Arc& a : arcs_) {
        if (a.tail >= n_ || a.head >= n_) {
            throw InvalidInput("arc " + arc_text(a.tail, a.head) + " has an endpoint out of range");
        }
        if (a.tail == a.head) {
            throw InvalidInput("loop at vertex " + std::to_string(a.tail));
        }
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (auto dup = std::adjacent_find(arcs_.begin(), arcs_.end()); dup != arcs_.end()) {
        throw InvalidInput("duplicate arc " + arc_text(dup->tail, dup->head));
    }

    out_offsets_.assign(n_ + 1, 0);
    in_offsets_.assign(n_ + 1, 0);
    for (const Arc& a : arcs_) {
        ++out_offsets_[a.tail + 1];
        ++in_offsets_[a.head + 1];
    }
    std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
    std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());

    out_targets_.resize(arcs_.size());
    in_sources_.resize(arcs_.size());
    std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        out_targets_[i] = arcs_[i].head;
        // arcs_ is sorted by tail, so in-lists come out ascending as well
        in_sources_[in_fill[arcs_[i].head]++] = arcs_[i].tail;
    }
}

std::span<const VertexId> Digraph::out_neighbors(VertexId v) const {
    return std::span<const VertexId>(out_targets_).subspan(out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]);
}

std::span<const VertexId> Digraph::in_neighbors(VertexId v) const {
    return std::span<const VertexId>(in_sources_).subspan(in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
}

bool Digraph::has_arc(VertexId tail, VertexId head) const {
    if (tail >= n_ || head >= n_) {
        return false;
    }
    auto out = out_neighbors(tail);
    return std::binary_search(out.begin(), out.end(), head);
}

std::string Digraph::label(VertexId v) const {
    return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

void Digraph::check_members(const VertexSet& s) const {
    for (VertexId v : s) {
        if (v >= n_) {
            throw InvalidInput("vertex " + std::to_string(v) + " out of range (n = " + std::to_string(n_) + ")");
        }
    }
}

VertexSet sinks(const Digraph& d) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (d.out_degree(v) == 0) {
            out.push_back(v);
        }
    }
    return VertexSet::from_sorted(std::move(out));
}

VertexSet sources(const Digraph& d) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (d.in_degree(v) == 0) {
            out.push_back(v);
        }
    }
    return VertexSet::from_sorted(std::move(out));
}

VertexSet in_set(const Digraph& d, const VertexSet& s) {
    d.check_members(s);
    auto member = s.mask(d.vertex_count());
    std::vector<bool> hit(d.vertex_count(), false);
    for (VertexId v : s) {
        for (VertexId u : d.in_neighbors(v)) {
            if (!member[u]) hit[u] = true;
        }
    }
    return VertexSet::from_mask(hit);
}

VertexSet out_set(const Digraph& d, const VertexSet& s) {
    d.check_members(s);
    auto member = s.mask(d.vertex_count());
    std::vector<bool> hit(d.vertex_count(), false);
    for (VertexId v : s) {
        for (VertexId u : d.out_neighbors(v)) {
            if (!member[u]) hit[u] = true;
        }
    }
    return VertexSet::from_mask(hit);
}

VertexSet second_in_set(const Digraph& d, const VertexSet& s) {
    d.check_members(s);
    auto dist = distance_to_set(d, s);
    std::vector<bool> hit(d.vertex_count(), false);
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        hit[v] = dist[v] == 2;
    }
    return VertexSet::from_mask(hit);
}

VertexSet closed_in_neighborhood(const Digraph& d, VertexId v) {
    std::vector<VertexId> out(d.in_neighbors(v).begin(), d.in_neighbors(v).end());
    out.push_back(v);
    return VertexSet(std::move(out));
}

VertexSet closed_out_neighborhood(const Digraph& d, VertexId v) {
    std::vector<VertexId> out(d.out_neighbors(v).begin(), d.out_neighbors(v).end());
    out.push_back(v);
    return VertexSet(std::move(out));
}

bool is_independent(const Digraph& d, const VertexSet& s) {
    d.check_members(s);
    auto member = s.mask(d.vertex_count());
    for (VertexId v : s) {
        for (VertexId u : d.out_neighbors(v)) {
            if (member[u]) return false;
        }
    }
    return true;
}

bool is_quasi_kernel(const Digraph& d, const VertexSet& s) {
    if (!is_independent(d, s)) {
        return false;
    }
    auto dist = distance_to_set(d, s);
    return std::all_of(dist.begin(), dist.end(), [](std::uint8_t x) { return x <= 2; });
}

bool is_kernel(const Digraph& d, const VertexSet& s) {
    if (!is_independent(d, s)) {
        return false;
    }
    auto dist = distance_to_set(d, s);
    return std::all_of(dist.begin(), dist.end(), [](std::uint8_t x) { return x <= 1; });
}

bool is_two_serf(const Digraph& d, VertexId v) {
    if (v >= d.vertex_count()) {
        throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    }
    return is_quasi_kernel(d, VertexSet{v});
}

bool is_semicomplete(const Digraph& d) {
    const auto n = static_cast<VertexId>(d.vertex_count());
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (!d.adjacent(u, v)) return false;
        }
    }
    return true;
}

bool is_orientation(const Digraph& d) {
    return std::none_of(d.arcs().begin(), d.arcs().end(),
                        [&](const Arc& a) { return d.has_arc(a.head, a.tail); });
}

bool is_dominating_set(const Digraph& d, const VertexSet& l) {
    d.check_members(l);
    auto member = l.mask(d.vertex_count());
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (member[v]) continue;
        auto out = d.out_neighbors(v);
        if (std::none_of(out.begin(), out.end(), [&](VertexId u) { return member[u]; })) {
            return false;
        }
    }
    return true;
}

bool is_strongly_connected(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    if (n <= 1) {
        return true;
    }
    auto reaches_all = [&](bool forward) {
        std::vector<bool> seen(n, false);
        std::vector<VertexId> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : forward ? d.out_neighbors(v) : d.in_neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = true;
                    ++count;
                    stack.push_back(u);
                }
            }
        }
        return count == n;
    };
    return reaches_all(true) && reaches_all(false);
}

std::optional<VertexId> VertexMap::to_local(VertexId parent) const {
    auto it = std::lower_bound(to_parent_.begin(), to_parent_.end(), parent);
    if (it == to_parent_.end() || *it != parent) {
        return std::nullopt;
    }
    return static_cast<VertexId>(it - to_parent_.begin());
}

VertexSet VertexMap::lift(const VertexSet& local) const {
    std::vector<VertexId> out;
    out.reserve(local.size());
    for (VertexId v : local) {
        out.push_back(to_parent(v));
    }
    // to_parent_ is ascending, so the image stays sorted
    return VertexSet::from_sorted(std::move(out));
}

VertexSet VertexMap::restrict(const VertexSet& parent_set) const {
    std::vector<VertexId> out;
    for (VertexId v : parent_set) {
        if (auto local = to_local(v)) {
            out.push_back(*local);
        }
    }
    return VertexSet::from_sorted(std::move(out));
}

InducedSubgraph induced(const Digraph& d, const VertexSet& s) {
    d.check_members(s);
    std::vector<VertexId> to_parent(s.begin(), s.end());
    VertexMap map(to_parent);
    std::vector<Arc> arcs;
    for (VertexId local = 0; local < to_parent.size(); ++local) {
        for (VertexId head : d.out_neighbors(to_parent[local])) {
            if (auto h = map.to_local(head)) {
                arcs.push_back({local, *h});
            }
        }
    }
    std::vector<std::string> labels;
    if (d.has_labels()) {
        for (VertexId v : to_parent) {
            labels.push_back(d.label(v));
        }
    }
    return {Digraph(to_parent.size(), std::move(arcs), std::move(labels)), std::move(map)};
}

Digraph reversed(const Digraph& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count());
    for (const Arc& a : d.arcs()) {
        arcs.push_back({a.head, a.tail});
    }
    return Digraph(d.vertex_count(), std::move(arcs), d.labels());
}

Digraph relabeled(const Digraph& d, std::span<const VertexId> perm) {
    if (perm.size() != d.vertex_count()) {
        throw InvalidInput("permutation size does not match vertex count");
    }
    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count());
    for (const Arc& a : d.arcs()) {
        arcs.push_back({perm[a.tail], perm[a.head]});
    }
    return Digraph(d.vertex_count(), std::move(arcs));
}

} // namespace qk
