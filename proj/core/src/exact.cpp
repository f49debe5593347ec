#include "qk/exact.hpp"

#include "detail/subset_search.hpp"
#include "qk/construct.hpp"
#include "qk/error.hpp"

namespace qk {

namespace {

SolveReport search_minimum(const Digraph& d, std::optional<std::size_t> budget, bool independent,
                           const std::string& label) {
    const std::size_t n = d.vertex_count();
    const detail::SetChecker checker(d);
    const VertexSet all = VertexSet::range(n);
    std::vector<VertexId> found;
    bool hit = false;
    auto visit = [&](std::span<const VertexId> chosen) {
        if (checker.quasi_kernel(chosen)) {
            found.assign(chosen.begin(), chosen.end());
            return true;
        }
        return false;
    };
    detail::SubsetEnumerator enumerator(d, all.members(), independent, visit);
    const std::size_t limit = budget ? std::min(*budget, n) : n;
    for (std::size_t k = 0; k <= limit && !hit; ++k) {
        hit = enumerator.run(k);
    }

    SolveReport report;
    report.algorithm = label;
    report.explored = enumerator.visited();
    if (hit) {
        report.certificate = certify(d, VertexSet::from_sorted(std::move(found)), label);
        report.optimal = true;
    } else {
        report.certificate = certify(d, quasi_kernel_cl(d), "cl");
        report.certificate->note = "no quasi-kernel of size at most " + std::to_string(limit) +
                                   "; returned the rooted construction instead";
        report.optimal = false;
    }
    return report;
}

} // namespace

SolveReport min_quasi_kernel(const Digraph& d, std::optional<std::size_t> budget, Pruning pruning) {
    if (d.vertex_count() > kExactVertexCap) {
        throw CapExceeded("exact search refused: " + std::to_string(d.vertex_count()) +
                          " vertices exceeds the cap of " + std::to_string(kExactVertexCap));
    }
    return search_minimum(d, budget, pruning == Pruning::independence, "exact");
}

SolveReport min_quasi_kernel(const SplitDigraph& sd, std::optional<std::size_t> budget) {
    if (sd.independent_part().size() > kExactIndependentCap) {
        throw CapExceeded("exact search refused: independent part of " +
                          std::to_string(sd.independent_part().size()) + " vertices exceeds the cap of " +
                          std::to_string(kExactIndependentCap));
    }
    // Independence pruning already admits at most one clique vertex.
    return search_minimum(sd.graph(), budget, true, "exact");
}

bool has_qk_of_size_at_most(const Digraph& d, std::size_t q) {
    return min_quasi_kernel(d, q).optimal;
}

bool has_qk_of_size_at_most(const SplitDigraph& sd, std::size_t q) {
    return min_quasi_kernel(sd, q).optimal;
}

std::optional<VertexSet> min_dominating_set(const Digraph& d, std::optional<std::size_t> budget) {
    const std::size_t n = d.vertex_count();
    if (n > kExactVertexCap) {
        throw CapExceeded("exact dominating-set search refused: " + std::to_string(n) + " vertices");
    }
    const detail::SetChecker checker(d);
    const VertexSet all = VertexSet::range(n);
    std::vector<VertexId> found;
    auto visit = [&](std::span<const VertexId> chosen) {
        if (checker.dominating(chosen)) {
            found.assign(chosen.begin(), chosen.end());
            return true;
        }
        return false;
    };
    detail::SubsetEnumerator enumerator(d, all.members(), false, visit);
    const std::size_t limit = budget ? std::min(*budget, n) : n;
    for (std::size_t k = 0; k <= limit; ++k) {
        if (enumerator.run(k)) {
            return VertexSet::from_sorted(std::move(found));
        }
    }
    return std::nullopt;
}

} // namespace qk
