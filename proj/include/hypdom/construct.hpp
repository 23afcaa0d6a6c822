#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "hypdom/baranyai.hpp"
#include "hypdom/bitset.hpp"
#include "hypdom/error.hpp"
#include "hypdom/formula.hpp"
#include "hypdom/hypergraph.hpp"
#include "hypdom/partition.hpp"

namespace hypdom {

namespace detail {

inline std::vector<std::size_t> lookup_class(
    const std::map<std::vector<std::size_t>, std::size_t>& index,
    const std::vector<std::vector<std::size_t>>& edges) {
    std::vector<std::size_t> cls;
    cls.reserve(edges.size());
    for (auto e : edges) {
        std::sort(e.begin(), e.end());
        auto it = index.find(e);
        if (it == index.end())
            fail(Errc::SearchFailed, "constructed edge is not part of the family");
        cls.push_back(it->second);
    }
    std::sort(cls.begin(), cls.end());
    return cls;
}

inline std::vector<std::vector<std::size_t>> singleton_classes(std::size_t count) {
    std::vector<std::vector<std::size_t>> classes(count);
    for (std::size_t i = 0; i < count; ++i) classes[i] = {i};
    return classes;
}

// Consecutive index pairs; an odd leftover joins the last class.
inline std::vector<std::vector<std::size_t>> pair_classes(std::size_t count) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i + 1 < count; i += 2) classes.push_back({i, i + 1});
    if (count % 2 == 1 && !classes.empty()) classes.back().push_back(count - 1);
    return classes;
}

// Perfect matching of each edge with its vertex complement (|X| = |Y| = r).
inline std::vector<std::vector<std::size_t>> complement_pair_classes(const Hypergraph& h) {
    auto index = edge_index_map(h);
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> used(h.m(), false);
    std::vector<std::size_t> all(h.n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t i = 0; i < h.m(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> comp;
        std::set_difference(all.begin(), all.end(), h.edges[i].begin(), h.edges[i].end(),
                            std::back_inserter(comp));
        std::size_t j = index.at(comp);
        used[i] = used[j] = true;
        classes.push_back({std::min(i, j), std::max(i, j)});
    }
    return classes;
}

// Walk edges in colex order, matching each to the lexicographically smallest
// unused intersecting edge; backtrack on failure. For |X| = |Y| = r any
// intersecting pair both dominates and is total, so the only forbidden
// partner is the vertex complement.
inline std::vector<std::vector<std::size_t>> intersecting_pair_classes(const Hypergraph& h) {
    std::size_t m = h.m();
    std::vector<Bitset> masks;
    masks.reserve(m);
    for (const auto& e : h.edges) {
        Bitset b(h.n);
        for (std::size_t v : e) b.set(v);
        masks.push_back(std::move(b));
    }
    std::vector<std::size_t> lex_order(m);
    std::iota(lex_order.begin(), lex_order.end(), std::size_t{0});
    std::sort(lex_order.begin(), lex_order.end(),
              [&](std::size_t x, std::size_t y) { return h.edges[x] < h.edges[y]; });

    std::vector<std::size_t> partner(m, m);
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, std::size_t matched) -> bool {
        if (matched == m) return true;
        std::size_t e = 0;
        while (partner[e] != m) ++e;
        for (std::size_t f : lex_order) {
            if (f == e || partner[f] != m || !masks[e].intersects(masks[f])) continue;
            if (++nodes > 4'000'000)
                fail(Errc::SearchFailed, "pairing search exceeded its budget");
            partner[e] = f;
            partner[f] = e;
            if (self(self, matched + 2)) return true;
            partner[e] = partner[f] = m;
        }
        return false;
    };
    if (!rec(rec, 0)) fail(Errc::SearchFailed, "no intersecting pairing exists");
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t e = 0; e < m; ++e)
        if (partner[e] > e) classes.push_back({e, partner[e]});
    return classes;
}

// Lemma 6 / Lemma 11 classes for the 3-uniform family with |X| = |Y| = k,
// k even. For each vertex y of Y, a 1-factorization of the complete graph on
// X lifts to k-1 classes of k/2 edges {x, x', y}: such a class covers all of
// X plus y (so only same-side vertices are missed and it dominates) and its
// edges share y (so it is total). Mirror classes run through X. Every mixed
// 3-edge is used exactly once: 2k(k-1) classes of k/2 edges.
inline std::vector<std::vector<std::size_t>> star_factor_classes(const Hypergraph& h,
                                                                 std::size_t k) {
    auto index = edge_index_map(h);
    Factorization pairs = baranyai(k, 2);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t y = k; y < 2 * k; ++y)
        for (const auto& factor : pairs.factors) {
            std::vector<std::vector<std::size_t>> edges;
            for (const auto& p : factor) edges.push_back({p[0], p[1], y});
            classes.push_back(lookup_class(index, edges));
        }
    for (std::size_t x = 0; x < k; ++x)
        for (const auto& factor : pairs.factors) {
            std::vector<std::vector<std::size_t>> edges;
            for (const auto& p : factor) edges.push_back({x, p[0] + k, p[1] + k});
            classes.push_back(lookup_class(index, edges));
        }
    return classes;
}

// Thm 5 cases 2-3 with r = 2: the cyclic proper edge coloring of the complete
// bipartite graph. Each class takes one edge per vertex of the smaller side,
// so it covers that side and dominates; the max(a, b) classes use every edge
// exactly once.
inline std::vector<std::vector<std::size_t>> cyclic_bipartite_classes(const Hypergraph& h,
                                                                      std::size_t a,
                                                                      std::size_t b) {
    auto index = edge_index_map(h);
    std::vector<std::vector<std::size_t>> classes;
    if (a <= b) {
        for (std::size_t t = 0; t < b; ++t) {
            std::vector<std::vector<std::size_t>> edges;
            for (std::size_t i = 0; i < a; ++i) edges.push_back({i, a + (i + t) % b});
            classes.push_back(lookup_class(index, edges));
        }
    } else {
        for (std::size_t t = 0; t < a; ++t) {
            std::vector<std::vector<std::size_t>> edges;
            for (std::size_t j = 0; j < b; ++j) edges.push_back({(j + t) % a, a + j});
            classes.push_back(lookup_class(index, edges));
        }
    }
    return classes;
}

// Fallback for the remaining lower-bound shapes: pack `target` pairwise
// edge-disjoint dominating seed classes by lexicographic backtracking, then
// hand leftover edges out round-robin (supersets of dominating sets
// dominate). Bounded; throws SearchFailed past its budget.
inline std::vector<std::vector<std::size_t>> seed_packing_classes(const Hypergraph& h,
                                                                  std::size_t target,
                                                                  std::size_t seed_cap) {
    std::size_t m = h.m();
    std::vector<Bitset> masks;
    for (const auto& e : h.edges) {
        Bitset bm(h.n);
        for (std::size_t v : e) bm.set(v);
        masks.push_back(std::move(bm));
    }
    auto dominates = [&](const Bitset& covered) {
        for (const auto& em : masks)
            if (!em.intersects(covered)) return false;
        return true;
    };

    std::vector<std::vector<std::size_t>> seeds;
    std::vector<bool> used(m, false);
    std::uint64_t nodes = 0;
    auto build = [&](auto&& self, std::vector<std::size_t>& cur, Bitset& covered,
                     std::size_t from) -> bool {
        if (++nodes > 10'000'000) fail(Errc::SearchFailed, "seed packing exceeded its budget");
        if (!cur.empty() && dominates(covered)) {
            seeds.push_back(cur);
            if (seeds.size() == target) return true;
            std::vector<std::size_t> next;
            Bitset ncov(h.n);
            if (self(self, next, ncov, 0)) return true;
            seeds.pop_back();
            // fall through: a larger seed may succeed where this one did not
        }
        if (cur.size() == seed_cap) return false;
        for (std::size_t e = from; e < m; ++e) {
            if (used[e]) continue;
            used[e] = true;
            cur.push_back(e);
            Bitset saved = covered;
            covered |= masks[e];
            if (self(self, cur, covered, e + 1)) return true;
            covered = std::move(saved);
            cur.pop_back();
            used[e] = false;
        }
        return false;
    };
    std::vector<std::size_t> cur;
    Bitset cov(h.n);
    if (target == 0 || !build(build, cur, cov, 0))
        fail(Errc::SearchFailed, "could not pack the required dominating classes");

    std::size_t next_class = 0;
    for (std::size_t e = 0; e < m; ++e) {
        if (used[e]) continue;
        seeds[next_class].push_back(e);
        next_class = (next_class + 1) % seeds.size();
    }
    for (auto& cls : seeds) std::sort(cls.begin(), cls.end());
    return seeds;
}

}  // namespace detail

/// Builds an explicit witness partition realizing formula(f, quantity): the
/// partition has exactly that many classes and validates on the appropriate
/// reduction. Throws NotApplicable when no rule covers the family.
inline DomaticPartition construct_partition(const FamilyDescriptor& f, Quantity q) {
    FormulaResult fr = formula(f, q);
    if (fr.kind == BoundKind::NotApplicable)
        fail(Errc::NotApplicable, "no constructive rule for " + family_name(f) + " / " +
                                      quantity_name(q) + " (" + fr.citation + ")");

    DomaticPartition part;
    part.total = (q == Quantity::Dt || q == Quantity::Edt);
    part.kind = (q == Quantity::D || q == Quantity::Dt) ? GroundSet::Vertex : GroundSet::Edge;

    if (q == Quantity::D || q == Quantity::Dt) {
        std::size_t n = std::holds_alternative<Complete>(f)
                            ? std::get<Complete>(f).n
                            : std::get<CompleteBipartite>(f).a + std::get<CompleteBipartite>(f).b;
        part.classes =
            (q == Quantity::D) ? detail::singleton_classes(n) : detail::pair_classes(n);
    } else if (const auto* c = std::get_if<Complete>(&f)) {
        std::size_t n = c->n, r = c->r;
        std::size_t m = static_cast<std::size_t>(binomial(n, r));
        if (q == Quantity::Edt) {
            part.classes = detail::pair_classes(m);  // any two edges intersect here
        } else if (r > n / 2) {
            part.classes = detail::singleton_classes(m);
        } else {
            Factorization fact = baranyai(n, r);
            for (const auto& factor : fact.factors) {
                std::vector<std::size_t> cls;
                for (const auto& e : factor) cls.push_back(static_cast<std::size_t>(colex_rank(e)));
                std::sort(cls.begin(), cls.end());
                part.classes.push_back(std::move(cls));
            }
        }
    } else {
        const auto& cb = std::get<CompleteBipartite>(f);
        std::size_t a = cb.a, b = cb.b, r = cb.r, n = a + b;
        Hypergraph h = realize(f);
        if (r > n / 2) {
            part.classes = (q == Quantity::Ed) ? detail::singleton_classes(h.m())
                                               : detail::pair_classes(h.m());
        } else if (a == b && a == r) {
            part.classes = (q == Quantity::Ed) ? detail::complement_pair_classes(h)
                                               : detail::intersecting_pair_classes(h);
        } else if (r == 3 && a == b && a % 2 == 0) {
            part.classes = detail::star_factor_classes(h, a);
        } else if (r == 2) {
            part.classes = detail::cyclic_bipartite_classes(h, a, b);
        } else {
            std::size_t seed_cap = 2 * (std::min(a, b) / r);
            part.classes =
                detail::seed_packing_classes(h, static_cast<std::size_t>(fr.value), seed_cap);
        }
    }

    if (part.classes.size() != fr.value)
        fail(Errc::SearchFailed, "constructed " + std::to_string(part.classes.size()) +
                                     " classes, expected " + std::to_string(fr.value));
    return part;
}

}  // namespace hypdom
