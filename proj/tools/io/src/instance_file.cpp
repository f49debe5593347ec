#include "qk/io/instance_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace qk::io {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        if (end > pos) tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return v;
}

std::string canonical_text(const Instance& inst, bool with_labels) {
    const Digraph& d = inst.graph;
    std::ostringstream out;
    out << "qkdg 1\n";
    if (with_labels && d.has_labels()) {
        for (VertexId v = 0; v < d.vertex_count(); ++v) {
            out << "# label " << v << ' ' << d.label(v) << '\n';
        }
    }
    out << "n " << d.vertex_count() << '\n';
    if (inst.split) {
        out << 'k';
        for (VertexId v : inst.split->clique_part()) out << ' ' << v;
        out << '\n';
    }
    for (const Arc& a : d.arcs()) {
        out << "a " << a.tail << ' ' << a.head << '\n';
    }
    return out.str();
}

} // namespace

Instance parse_instance(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool header = false;
    std::optional<std::size_t> n;
    std::optional<std::vector<VertexId>> clique;
    std::size_t clique_line = 0;
    std::vector<Arc> arcs;
    std::set<std::pair<VertexId, VertexId>> seen;
    std::vector<std::pair<std::size_t, std::string>> labels;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens.front().front() == '#') {
            if (header && tokens.size() == 4 && tokens[0] == "#" && tokens[1] == "label") {
                labels.emplace_back(parse_index(tokens[2], line_no), std::string(tokens[3]));
            }
            continue;
        }

        if (!header) {
            if (tokens.size() != 2 || tokens[0] != "qkdg" || tokens[1] != "1") {
                throw ParseError(line_no, "expected header 'qkdg 1'");
            }
            header = true;
            continue;
        }
        const std::string_view key = tokens.front();
        if (key == "n") {
            if (n) throw ParseError(line_no, "duplicate 'n' line");
            if (tokens.size() != 2) throw ParseError(line_no, "expected 'n <count>'");
            n = parse_index(tokens[1], line_no);
            continue;
        }
        if (!n) throw ParseError(line_no, "'" + std::string(key) + "' line before 'n'");
        if (key == "k") {
            if (clique) throw ParseError(line_no, "duplicate 'k' line");
            clique.emplace();
            clique_line = line_no;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const std::size_t v = parse_index(tokens[i], line_no);
                if (v >= *n) throw ParseError(line_no, "clique vertex " + std::to_string(v) + " out of range");
                clique->push_back(static_cast<VertexId>(v));
            }
        } else if (key == "a") {
            if (tokens.size() != 3) throw ParseError(line_no, "expected 'a <tail> <head>'");
            const std::size_t t = parse_index(tokens[1], line_no);
            const std::size_t h = parse_index(tokens[2], line_no);
            if (t >= *n || h >= *n) throw ParseError(line_no, "arc endpoint out of range");
            if (t == h) throw ParseError(line_no, "loop at vertex " + std::to_string(t));
            if (!seen.emplace(t, h).second) {
                throw ParseError(line_no, "duplicate arc (" + std::to_string(t) + "," + std::to_string(h) + ")");
            }
            arcs.push_back({static_cast<VertexId>(t), static_cast<VertexId>(h)});
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
        }
    }
    if (!header) throw ParseError(line_no + 1, "missing header 'qkdg 1'");
    if (!n) throw ParseError(line_no + 1, "missing 'n' line");

    std::vector<std::string> names;
    if (!labels.empty()) {
        names.resize(*n);
        for (std::size_t v = 0; v < *n; ++v) names[v] = std::to_string(v);
        for (auto& [v, name] : labels) {
            if (v >= *n) throw ParseError(line_no, "label for vertex " + std::to_string(v) + " out of range");
            names[v] = std::move(name);
        }
    }
    Instance inst{Digraph(*n, std::move(arcs), std::move(names)), std::nullopt};
    if (clique) {
        try {
            inst.split = check_split(inst.graph, VertexSet(std::move(*clique)));
        } catch (const InvalidInput& e) {
            throw ParseError(clique_line, e.what());
        }
    }
    return inst;
}

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

Instance read_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("cannot open '" + path + "'");
    }
    return parse_instance(in);
}

std::string format_instance(const Digraph& d, const std::optional<VertexSet>& clique) {
    Instance inst{d, std::nullopt};
    if (clique) inst.split = check_split(d, *clique);
    return canonical_text(inst, true);
}

std::string format_instance(const SplitDigraph& sd) {
    return canonical_text(Instance{sd.graph(), sd}, true);
}

std::string format_instance(const Instance& inst) {
    return canonical_text(inst, true);
}

std::string instance_digest(const Instance& inst) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_text(inst, false)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

std::string to_dot(const Instance& inst) {
    const Digraph& d = inst.graph;
    std::ostringstream out;
    out << "digraph qk {\n";
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << d.label(v) << "\"";
        if (inst.split && inst.split->in_clique(v)) out << ", shape=box";
        out << "];\n";
    }
    for (const Arc& a : d.arcs()) {
        out << "  " << a.tail << " -> " << a.head << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace qk::io
