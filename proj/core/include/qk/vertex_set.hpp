#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qk {

using VertexId = std::uint32_t;

/// Finite set of vertex indices kept in ascending order without duplicates.
/// Ascending order is also the canonical external form.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<VertexId> members);
    /// Sorts the input; throws InvalidInput on duplicates.
    explicit VertexSet(std::vector<VertexId> members);

    /// Trusts the caller: `members` must already be strictly increasing.
    static VertexSet from_sorted(std::vector<VertexId> members);
    /// All indices in [0, n).
    static VertexSet range(std::size_t n);
    /// Members of `mask` (one flag per vertex) that are set.
    static VertexSet from_mask(const std::vector<bool>& mask);

    bool contains(VertexId v) const;
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    VertexId front() const { return members_.front(); }
    std::span<const VertexId> members() const noexcept { return members_; }

    /// Membership flags for a host with `n` vertices.
    std::vector<bool> mask(std::size_t n) const;

    /// "v1,v2,..." (empty string for the empty set).
    std::string to_string() const;
    /// Parses the "v1,v2,..." literal accepted by `to_string`.
    static VertexSet parse(const std::string& literal);

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<VertexId> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

} // namespace qk
