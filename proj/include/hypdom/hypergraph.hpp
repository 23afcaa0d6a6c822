#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypdom/combinatorics.hpp"
#include "hypdom/error.hpp"

namespace hypdom {

/// A hypergraph on vertex set [0, n). Edges are stored as sorted vertex
/// vectors; the edge list order is significant (edge indices refer to it).
/// Immutable after construction.
struct Hypergraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> edges;
    std::optional<std::size_t> uniform_r;

    std::size_t m() const { return edges.size(); }
};

/// Validates and canonicalizes: vertices sorted within each edge (set
/// semantics), edge order preserved. uniform_r is set when all edges share
/// one size.
inline Hypergraph make_hypergraph(std::size_t n, std::vector<std::vector<std::size_t>> edges) {
    for (std::size_t pos = 0; pos < edges.size(); ++pos) {
        auto& e = edges[pos];
        if (e.empty())
            fail(Errc::EmptyEdge, "edge " + std::to_string(pos) + " is empty", pos);
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.back() >= n)
            fail(Errc::IndexOutOfRange,
                 "edge " + std::to_string(pos) + ": vertex " + std::to_string(e.back()) +
                     " out of range (n=" + std::to_string(n) + ")",
                 pos);
    }
    std::map<std::vector<std::size_t>, std::size_t> seen;
    for (std::size_t pos = 0; pos < edges.size(); ++pos) {
        auto [it, inserted] = seen.emplace(edges[pos], pos);
        if (!inserted)
            fail(Errc::DuplicateEdge,
                 "edge " + std::to_string(pos) + " duplicates edge " + std::to_string(it->second),
                 pos);
    }
    std::optional<std::size_t> uniform;
    if (!edges.empty()) {
        std::size_t r = edges.front().size();
        bool all = std::all_of(edges.begin(), edges.end(),
                               [&](const auto& e) { return e.size() == r; });
        if (all) uniform = r;
    }
    return Hypergraph{n, std::move(edges), uniform};
}

/// Complete r-uniform hypergraph: all r-subsets of [0, n) in colex order.
inline Hypergraph generate_complete(std::size_t n, std::size_t r) {
    if (r == 0 || r > n)
        fail(Errc::InvalidParams,
             "complete family needs 1 <= r <= n, got n=" + std::to_string(n) +
                 " r=" + std::to_string(r));
    std::vector<std::vector<std::size_t>> edges;
    edges.reserve(static_cast<std::size_t>(binomial(n, r)));
    for_each_colex_subset(n, r, [&](const std::vector<std::size_t>& s) { edges.push_back(s); });
    return Hypergraph{n, std::move(edges), r};
}

/// Complete bipartite r-uniform hypergraph on X = [0, a), Y = [a, a+b):
/// all r-subsets meeting both parts, in colex order.
inline Hypergraph generate_complete_bipartite(std::size_t a, std::size_t b, std::size_t r) {
    if (r < 2 || a < 1 || b < 1 || r > a + b)
        fail(Errc::InvalidParams,
             "bipartite family needs r >= 2, a,b >= 1, r <= a+b, got a=" + std::to_string(a) +
                 " b=" + std::to_string(b) + " r=" + std::to_string(r));
    std::vector<std::vector<std::size_t>> edges;
    for_each_colex_subset(a + b, r, [&](const std::vector<std::size_t>& s) {
        if (s.front() < a && s.back() >= a) edges.push_back(s);
    });
    return Hypergraph{a + b, std::move(edges), r};
}

/// Per-vertex degree: the number of edges containing each vertex.
inline std::vector<std::size_t> degrees(const Hypergraph& h) {
    std::vector<std::size_t> deg(h.n, 0);
    for (const auto& e : h.edges)
        for (std::size_t v : e) ++deg[v];
    return deg;
}

/// Maps each edge (as a sorted vertex set) to its index in h.edges.
inline std::map<std::vector<std::size_t>, std::size_t> edge_index_map(const Hypergraph& h) {
    std::map<std::vector<std::size_t>, std::size_t> idx;
    for (std::size_t i = 0; i < h.edges.size(); ++i) idx.emplace(h.edges[i], i);
    return idx;
}

// ---------------------------------------------------------------------------
// Parameterized families.

struct Complete {
    std::size_t n = 0, r = 0;
};

struct CompleteBipartite {
    std::size_t a = 0, b = 0, r = 0;  // |X| = a on [0, a); |Y| = b on [a, a+b)
};

using FamilyDescriptor = std::variant<Complete, CompleteBipartite>;

inline void validate_family(const FamilyDescriptor& f) {
    if (const auto* c = std::get_if<Complete>(&f)) {
        if (c->r == 0 || c->r > c->n)
            fail(Errc::InvalidParams, "complete family needs 1 <= r <= n");
    } else {
        const auto& cb = std::get<CompleteBipartite>(f);
        if (cb.r < 2 || cb.a < 1 || cb.b < 1 || cb.r > cb.a + cb.b)
            fail(Errc::InvalidParams, "bipartite family needs r >= 2, a,b >= 1, r <= a+b");
    }
}

inline Hypergraph realize(const FamilyDescriptor& f) {
    if (const auto* c = std::get_if<Complete>(&f)) return generate_complete(c->n, c->r);
    const auto& cb = std::get<CompleteBipartite>(f);
    return generate_complete_bipartite(cb.a, cb.b, cb.r);
}

inline std::string family_name(const FamilyDescriptor& f) {
    if (const auto* c = std::get_if<Complete>(&f))
        return "complete(n=" + std::to_string(c->n) + ",r=" + std::to_string(c->r) + ")";
    const auto& cb = std::get<CompleteBipartite>(f);
    return "bipartite(a=" + std::to_string(cb.a) + ",b=" + std::to_string(cb.b) +
           ",r=" + std::to_string(cb.r) + ")";
}

}  // namespace hypdom
