#include "detail/subset_search.hpp"
#include "qk/exact.hpp"

#include <algorithm>
#include <map>

namespace qk {

std::vector<VertexSet> twin_classes(const SplitDigraph& sd) {
    const Digraph& d = sd.graph();
    using Key = std::pair<std::vector<VertexId>, std::vector<VertexId>>;
    std::map<Key, std::vector<VertexId>> groups;
    for (VertexId s : sd.independent_part()) {
        Key key{{d.in_neighbors(s).begin(), d.in_neighbors(s).end()},
                {d.out_neighbors(s).begin(), d.out_neighbors(s).end()}};
        groups[std::move(key)].push_back(s);
    }
    std::vector<VertexSet> classes;
    for (auto& [key, members] : groups) {
        classes.push_back(VertexSet::from_sorted(std::move(members)));
    }
    std::sort(classes.begin(), classes.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return classes;
}

namespace {

class ClassSearch {
public:
    ClassSearch(const SplitDigraph& sd, std::size_t k)
        : d_(sd.graph()), checker_(sd.graph()), classes_(twin_classes(sd)), k_(k) {}

    std::optional<VertexSet> run(const VertexSet& clique) {
        if (attempt(std::nullopt)) return result();
        for (VertexId c : clique) {
            if (attempt(c)) return result();
        }
        return std::nullopt;
    }

private:
    bool attempt(std::optional<VertexId> c) {
        chosen_.clear();
        if (c) {
            if (k_ == 0) return false;
            chosen_.push_back(*c);
        }
        clique_vertex_ = c;
        return go(0);
    }

    bool go(std::size_t index) {
        if (index == classes_.size()) {
            std::vector<VertexId> sorted = chosen_;
            std::sort(sorted.begin(), sorted.end());
            if (checker_.quasi_kernel(sorted)) {
                chosen_ = std::move(sorted);
                return true;
            }
            return false;
        }
        const VertexSet& cls = classes_[index];
        // excluded
        if (go(index + 1)) return true;
        // Twins share neighbourhoods, so the representative decides adjacency for the class.
        if (clique_vertex_ && d_.adjacent(*clique_vertex_, cls.front())) return false;
        const std::size_t mark = chosen_.size();
        // whole class
        if (mark + cls.size() <= k_) {
            chosen_.insert(chosen_.end(), cls.begin(), cls.end());
            if (go(index + 1)) return true;
            chosen_.resize(mark);
        }
        // representative only (identical to "whole" for singletons)
        if (cls.size() > 1 && mark + 1 <= k_) {
            chosen_.push_back(cls.front());
            if (go(index + 1)) return true;
            chosen_.resize(mark);
        }
        return false;
    }

    VertexSet result() const { return VertexSet::from_sorted(chosen_); }

    const Digraph& d_;
    detail::SetChecker checker_;
    std::vector<VertexSet> classes_;
    std::size_t k_;
    std::optional<VertexId> clique_vertex_;
    std::vector<VertexId> chosen_;
};

} // namespace

std::optional<QkCertificate> fpt_by_clique(const SplitDigraph& sd, std::size_t k) {
    ClassSearch search(sd, k);
    if (auto q = search.run(sd.clique_part())) {
        return certify(sd.graph(), *q, "fpt-k");
    }
    return std::nullopt;
}

std::optional<QkCertificate> fpt_by_independent(const SplitDigraph& sd, std::size_t k) {
    const Digraph& d = sd.graph();
    const detail::SetChecker checker(d);
    std::vector<VertexId> found;
    auto visit = [&](std::span<const VertexId> chosen) {
        std::vector<VertexId> sorted(chosen.begin(), chosen.end());
        std::sort(sorted.begin(), sorted.end());
        if (checker.quasi_kernel(sorted)) {
            found = std::move(sorted);
            return true;
        }
        return false;
    };
    // Independence pruning restricts the pool to independent vertices not
    // adjacent to the fixed clique vertex.
    detail::SubsetEnumerator enumerator(d, sd.independent_part().members(), true, visit);

    for (std::size_t size = 0; size <= std::min(k, sd.independent_part().size()); ++size) {
        if (enumerator.run(size)) {
            return certify(d, VertexSet::from_sorted(std::move(found)), "fpt-i");
        }
    }
    if (k >= 1) {
        for (VertexId c : sd.clique_part()) {
            const VertexId fixed[] = {c};
            for (std::size_t size = 0; size <= std::min(k - 1, sd.independent_part().size()); ++size) {
                if (enumerator.run(size, fixed)) {
                    return certify(d, VertexSet::from_sorted(std::move(found)), "fpt-i");
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace qk
