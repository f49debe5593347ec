#include "qk/vertex_set.hpp"

#include "qk/error.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>

namespace qk {

VertexSet::VertexSet(std::initializer_list<VertexId> members)
    : VertexSet(std::vector<VertexId>(members)) {}

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw InvalidInput("duplicate vertex in set");
    }
}

VertexSet VertexSet::from_sorted(std::vector<VertexId> members) {
    VertexSet s;
    s.members_ = std::move(members);
    return s;
}

VertexSet VertexSet::range(std::size_t n) {
    std::vector<VertexId> all(n);
    for (std::size_t v = 0; v < n; ++v) {
        all[v] = static_cast<VertexId>(v);
    }
    return from_sorted(std::move(all));
}

VertexSet VertexSet::from_mask(const std::vector<bool>& mask) {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < mask.size(); ++v) {
        if (mask[v]) {
            out.push_back(static_cast<VertexId>(v));
        }
    }
    return from_sorted(std::move(out));
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<bool> VertexSet::mask(std::size_t n) const {
    std::vector<bool> m(n, false);
    for (VertexId v : members_) {
        if (v < n) {
            m[v] = true;
        }
    }
    return m;
}

std::string VertexSet::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(members_[i]);
    }
    return out;
}

VertexSet VertexSet::parse(const std::string& literal) {
    std::vector<VertexId> out;
    std::size_t pos = 0;
    while (pos < literal.size()) {
        std::size_t comma = literal.find(',', pos);
        if (comma == std::string::npos) {
            comma = literal.size();
        }
        std::string_view item(literal.data() + pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        VertexId v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw InvalidInput("malformed vertex set literal '" + literal + "'");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    return VertexSet(std::move(out));
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from_sorted(std::move(out));
}

bool intersects(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace qk
