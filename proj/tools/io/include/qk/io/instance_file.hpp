#pragma once

#include "qk/error.hpp"
#include "qk/split_digraph.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace qk::io {

// Plain-text instance format, LF line endings:
//
//   qkdg 1
//   # comment lines start with '#', blank lines are ignored
//   n <vertex count>
//   k <clique vertex> ...        (optional; the complement is the independent part)
//   a <tail> <head>              (one per arc)
//
// Indices are 0-based. Writers emit arcs in ascending (tail, head) order and
// attach vertex labels as "# label <index> <name>" comments after the header;
// readers pick those comments up again (names must not contain whitespace).

class ParseError : public InvalidInput {
public:
    ParseError(std::size_t line, const std::string& message)
        : InvalidInput("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct Instance {
    Digraph graph;
    /// Present iff the file carried a "k" line (validated split partition).
    std::optional<SplitDigraph> split;
};

Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
/// Throws InvalidInput if the file cannot be opened, ParseError on bad content.
Instance read_instance(const std::string& path);

std::string format_instance(const Digraph& d, const std::optional<VertexSet>& clique = std::nullopt);
std::string format_instance(const SplitDigraph& sd);
std::string format_instance(const Instance& inst);

/// "fnv1a64:<16 hex digits>" over the comment-free canonical text.
std::string instance_digest(const Instance& inst);

/// Graphviz rendering; clique vertices are drawn as boxes.
std::string to_dot(const Instance& inst);

} // namespace qk::io
