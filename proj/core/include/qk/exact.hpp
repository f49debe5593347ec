#pragma once

#include "qk/certificate.hpp"
#include "qk/split_digraph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace qk {

/// Largest general digraph the exhaustive solvers accept.
inline constexpr std::size_t kExactVertexCap = 24;
/// Largest independent part the split-aware exhaustive solver accepts.
inline constexpr std::size_t kExactIndependentCap = 24;

struct SolveReport {
    /// Empty only when nothing was found within the budget and no fallback applies.
    std::optional<QkCertificate> certificate;
    /// True iff no smaller quasi-kernel exists.
    bool optimal = false;
    /// Number of candidate sets tested.
    std::uint64_t explored = 0;
    std::string algorithm;
};

enum class Pruning {
    /// Skip any extension that breaks independence.
    independence,
    /// Enumerate all k-subsets and filter at the leaves (test oracle).
    none,
};

/// Minimum quasi-kernel by cardinality-ascending, lexicographic enumeration;
/// the first hit is the lexicographically least minimum set.
///
/// With `budget`, sizes above it are not searched; if nothing is found the
/// report carries a quasi_kernel_cl result with optimal = false.
/// Throws CapExceeded when n > kExactVertexCap.
SolveReport min_quasi_kernel(const Digraph& d, std::optional<std::size_t> budget = std::nullopt,
                             Pruning pruning = Pruning::independence);

/// Split-aware variant: a quasi-kernel holds at most one clique vertex, so
/// the search is (no or one clique vertex) x (independent subsets). Cap is on
/// |I| only.
SolveReport min_quasi_kernel(const SplitDigraph& sd, std::optional<std::size_t> budget = std::nullopt);

bool has_qk_of_size_at_most(const Digraph& d, std::size_t q);
bool has_qk_of_size_at_most(const SplitDigraph& sd, std::size_t q);

/// Classes of independent vertices with equal in- and out-neighbourhoods,
/// ordered by smallest member; the smallest member is the representative.
std::vector<VertexSet> twin_classes(const SplitDigraph& sd);

/// Parameterised by |K|: every class is excluded, taken whole, or represented
/// by its smallest member, combined with no or one clique vertex.
std::optional<QkCertificate> fpt_by_clique(const SplitDigraph& sd, std::size_t k);

/// Parameterised by |I|: every independent subset of size <= k - 1 plus one
/// clique vertex, or of size <= k alone.
std::optional<QkCertificate> fpt_by_independent(const SplitDigraph& sd, std::size_t k);

/// Minimum directed dominating set (every vertex in L or with an out-neighbour
/// in L), cardinality-ascending then lexicographic. Empty optional when
/// nothing of size <= budget exists. Throws CapExceeded when n > kExactVertexCap.
std::optional<VertexSet> min_dominating_set(const Digraph& d, std::optional<std::size_t> budget = std::nullopt);

} // namespace qk
