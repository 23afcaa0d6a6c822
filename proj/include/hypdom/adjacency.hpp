#pragma once

#include <vector>

#include "hypdom/bitset.hpp"
#include "hypdom/error.hpp"
#include "hypdom/hypergraph.hpp"

namespace hypdom {

/// Symmetric, irreflexive adjacency over items [0, item_count). This is the
/// working object of every domination routine; both reductions below produce
/// one.
struct AdjacencyStructure {
    std::size_t item_count = 0;
    std::vector<Bitset> neighbors;

    AdjacencyStructure() = default;
    explicit AdjacencyStructure(std::size_t count)
        : item_count(count), neighbors(count, Bitset(count)) {}

    void link(std::size_t i, std::size_t j) {
        if (i >= item_count || j >= item_count)
            fail(Errc::IndexOutOfRange, "link(" + std::to_string(i) + "," + std::to_string(j) +
                                            ") outside item range");
        if (i == j) fail(Errc::InvalidParams, "self-adjacency is not allowed");
        neighbors[i].set(j);
        neighbors[j].set(i);
    }

    std::size_t degree(std::size_t i) const { return neighbors[i].count(); }
};

/// 2-section: items are vertices; two vertices are adjacent iff they co-occur
/// in some hyperedge.
inline AdjacencyStructure two_section(const Hypergraph& h) {
    AdjacencyStructure a(h.n);
    for (const auto& e : h.edges)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) a.link(e[i], e[j]);
    return a;
}

/// Line graph (intersection graph): items are hyperedges; two hyperedges are
/// adjacent iff they share at least one vertex.
inline AdjacencyStructure line_graph(const Hypergraph& h) {
    std::vector<Bitset> masks;
    masks.reserve(h.m());
    for (const auto& e : h.edges) {
        Bitset b(h.n);
        for (std::size_t v : e) b.set(v);
        masks.push_back(std::move(b));
    }
    AdjacencyStructure a(h.m());
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if (masks[i].intersects(masks[j])) a.link(i, j);
    return a;
}

}  // namespace hypdom
