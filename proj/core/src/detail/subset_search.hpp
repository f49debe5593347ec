#pragma once

#include "qk/digraph.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace qk::detail {

// Quasi-kernel / domination tests on candidate vertex lists. Uses 64-bit
// neighbourhood masks when the host fits, the generic predicates otherwise.
class SetChecker {
public:
    explicit SetChecker(const Digraph& d) : d_(d), fast_(d.vertex_count() <= 64) {
        if (!fast_) return;
        const std::size_t n = d.vertex_count();
        in_.assign(n, 0);
        adj_.assign(n, 0);
        for (const Arc& a : d.arcs()) {
            in_[a.head] |= bit(a.tail);
            adj_[a.head] |= bit(a.tail);
            adj_[a.tail] |= bit(a.head);
        }
        full_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    bool quasi_kernel(std::span<const VertexId> chosen) const {
        if (!fast_) {
            return is_quasi_kernel(d_, VertexSet::from_sorted({chosen.begin(), chosen.end()}));
        }
        std::uint64_t s = 0;
        for (VertexId v : chosen) s |= bit(v);
        std::uint64_t in1 = 0;
        for (VertexId v : chosen) {
            if (adj_[v] & s) return false;
            in1 |= in_[v];
        }
        std::uint64_t reach = s | in1;
        for (std::uint64_t rest = in1; rest; rest &= rest - 1) {
            reach |= in_[std::countr_zero(rest)];
        }
        return reach == full_;
    }

    bool dominating(std::span<const VertexId> chosen) const {
        if (!fast_) {
            return is_dominating_set(d_, VertexSet::from_sorted({chosen.begin(), chosen.end()}));
        }
        std::uint64_t reach = 0;
        for (VertexId v : chosen) reach |= bit(v) | in_[v];
        return reach == full_;
    }

private:
    static std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

    const Digraph& d_;
    bool fast_;
    std::vector<std::uint64_t> in_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t full_ = 0;
};

// Lexicographic enumeration of the k-subsets of `pool` (ascending). With
// `independent`, extensions adjacent to an already chosen vertex are skipped.
// `visit` returns true to stop; enumerate returns whether it stopped.
template <class Visit>
class SubsetEnumerator {
public:
    SubsetEnumerator(const Digraph& d, std::span<const VertexId> pool, bool independent, Visit visit)
        : d_(d), pool_(pool), independent_(independent), visit_(std::move(visit)),
          blocked_(d.vertex_count(), 0) {}

    bool run(std::size_t k, std::span<const VertexId> fixed = {}) {
        chosen_.assign(fixed.begin(), fixed.end());
        for (VertexId v : fixed) mark(v, 1);
        const bool hit = go(0, k);
        for (VertexId v : fixed) mark(v, -1);
        return hit;
    }

    std::uint64_t visited() const noexcept { return visited_; }

private:
    bool go(std::size_t start, std::size_t need) {
        if (need == 0) {
            ++visited_;
            return visit_(std::span<const VertexId>(chosen_));
        }
        for (std::size_t i = start; i + need <= pool_.size(); ++i) {
            const VertexId v = pool_[i];
            if (independent_ && blocked_[v]) continue;
            chosen_.push_back(v);
            mark(v, 1);
            const bool hit = go(i + 1, need - 1);
            mark(v, -1);
            if (hit) return true;
            chosen_.pop_back();
        }
        return false;
    }

    void mark(VertexId v, int delta) {
        if (!independent_) return;
        blocked_[v] += delta;
        for (VertexId u : d_.out_neighbors(v)) blocked_[u] += delta;
        for (VertexId u : d_.in_neighbors(v)) blocked_[u] += delta;
    }

    const Digraph& d_;
    std::span<const VertexId> pool_;
    bool independent_;
    Visit visit_;
    std::vector<int> blocked_;
    std::vector<VertexId> chosen_;
    std::uint64_t visited_ = 0;
};

} // namespace qk::detail
