#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hypdom/error.hpp"
#include "hypdom/hypergraph.hpp"
#include "hypdom/partition.hpp"

namespace hypdom {

// HGF, line oriented:   p hg <n> <m>   then exactly m lines   e <v1> ... <vk>
// Partition files:      p part <v|e> <0|1> <k>   then k lines  c <i1> <i2> ...
// '#' lines are comments; blank lines are ignored. All indices 0-based.

namespace detail {

struct LineReader {
    std::istringstream in;
    std::size_t line_no = 0;

    explicit LineReader(std::string_view text) : in(std::string(text)) {}

    // Next significant line, or false at end of input.
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

inline std::vector<std::size_t> parse_indices(std::istringstream& tokens, std::size_t line_no) {
    std::vector<std::size_t> out;
    std::string tok;
    while (tokens >> tok) {
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            fail(Errc::ParseError, "line " + std::to_string(line_no) + ": expected an index, got '" +
                                       tok + "'",
                 line_no);
        out.push_back(std::stoull(tok));
    }
    return out;
}

}  // namespace detail

inline Hypergraph parse_hgf(std::string_view text) {
    detail::LineReader reader(text);
    std::string line;
    if (!reader.next(line)) fail(Errc::ParseError, "empty input, expected 'p hg <n> <m>'", 0);

    std::istringstream header(line);
    std::string p, hg;
    std::size_t n = 0, m = 0;
    if (!(header >> p >> hg >> n >> m) || p != "p" || hg != "hg")
        fail(Errc::ParseError, "line " + std::to_string(reader.line_no) + ": expected 'p hg <n> <m>'",
             reader.line_no);

    std::vector<std::vector<std::size_t>> edges;
    std::vector<std::size_t> edge_lines;
    for (std::size_t i = 0; i < m; ++i) {
        if (!reader.next(line))
            fail(Errc::ParseError, "unexpected end of input: expected " + std::to_string(m) +
                                       " edge lines, got " + std::to_string(i),
                 reader.line_no);
        std::istringstream tokens(line);
        std::string tag;
        tokens >> tag;
        if (tag != "e")
            fail(Errc::ParseError, "line " + std::to_string(reader.line_no) + ": expected 'e ...'",
                 reader.line_no);
        auto verts = detail::parse_indices(tokens, reader.line_no);
        if (verts.empty())
            fail(Errc::EmptyEdge, "line " + std::to_string(reader.line_no) + ": empty edge",
                 reader.line_no);
        for (std::size_t v : verts) {
            if (std::count(verts.begin(), verts.end(), v) != 1)
                fail(Errc::ParseError,
                     "line " + std::to_string(reader.line_no) + ": repeated vertex " +
                         std::to_string(v),
                     reader.line_no);
            if (v >= n)
                fail(Errc::IndexOutOfRange,
                     "line " + std::to_string(reader.line_no) + ": vertex " + std::to_string(v) +
                         " out of range (n=" + std::to_string(n) + ")",
                     reader.line_no);
        }
        edges.push_back(std::move(verts));
        edge_lines.push_back(reader.line_no);
    }
    if (reader.next(line))
        fail(Errc::ParseError, "line " + std::to_string(reader.line_no) + ": trailing content",
             reader.line_no);

    try {
        return make_hypergraph(n, std::move(edges));
    } catch (const Error& e) {
        if (e.code() == Errc::DuplicateEdge && e.position() < edge_lines.size())
            fail(Errc::DuplicateEdge,
                 "line " + std::to_string(edge_lines[e.position()]) + ": " + e.what(),
                 edge_lines[e.position()]);
        throw;
    }
}

inline std::string write_hgf(const Hypergraph& h, std::string_view comment = {}) {
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << "\n";
    out << "p hg " << h.n << " " << h.m() << "\n";
    for (const auto& e : h.edges) {
        out << "e";
        for (std::size_t v : e) out << " " << v;
        out << "\n";
    }
    return out.str();
}

inline DomaticPartition parse_partition(std::string_view text) {
    detail::LineReader reader(text);
    std::string line;
    if (!reader.next(line))
        fail(Errc::ParseError, "empty input, expected 'p part <v|e> <0|1> <k>'", 0);

    std::istringstream header(line);
    std::string p, part, kind;
    int total = -1;
    std::size_t k = 0;
    if (!(header >> p >> part >> kind >> total >> k) || p != "p" || part != "part" ||
        (kind != "v" && kind != "e") || (total != 0 && total != 1))
        fail(Errc::ParseError,
             "line " + std::to_string(reader.line_no) + ": expected 'p part <v|e> <0|1> <k>'",
             reader.line_no);

    DomaticPartition result;
    result.kind = (kind == "v") ? GroundSet::Vertex : GroundSet::Edge;
    result.total = (total == 1);
    for (std::size_t i = 0; i < k; ++i) {
        if (!reader.next(line))
            fail(Errc::ParseError, "unexpected end of input: expected " + std::to_string(k) +
                                       " class lines, got " + std::to_string(i),
                 reader.line_no);
        std::istringstream tokens(line);
        std::string tag;
        tokens >> tag;
        if (tag != "c")
            fail(Errc::ParseError, "line " + std::to_string(reader.line_no) + ": expected 'c ...'",
                 reader.line_no);
        auto items = detail::parse_indices(tokens, reader.line_no);
        std::sort(items.begin(), items.end());
        items.erase(std::unique(items.begin(), items.end()), items.end());
        result.classes.push_back(std::move(items));
    }
    if (reader.next(line))
        fail(Errc::ParseError, "line " + std::to_string(reader.line_no) + ": trailing content",
             reader.line_no);
    return result;
}

inline std::string write_partition(const DomaticPartition& p) {
    std::ostringstream out;
    out << "p part " << (p.kind == GroundSet::Vertex ? "v" : "e") << " " << (p.total ? 1 : 0)
        << " " << p.classes.size() << "\n";
    for (const auto& cls : p.classes) {
        out << "c";
        for (std::size_t i : cls) out << " " << i;
        out << "\n";
    }
    return out.str();
}

}  // namespace hypdom
