#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hypdom/adjacency.hpp"
#include "hypdom/bitset.hpp"
#include "hypdom/error.hpp"
#include "hypdom/partition.hpp"

namespace hypdom {

namespace detail {

inline Bitset coverage_of(const AdjacencyStructure& a, std::span<const std::size_t> items,
                          bool closed) {
    Bitset cov(a.item_count);
    for (std::size_t i : items) {
        if (i >= a.item_count)
            fail(Errc::IndexOutOfRange, "item " + std::to_string(i) + " outside ground set");
        cov |= a.neighbors[i];
        if (closed) cov.set(i);
    }
    return cov;
}

}  // namespace detail

/// True iff S together with its neighborhood covers every item.
inline bool is_dominating(const AdjacencyStructure& a, std::span<const std::size_t> s) {
    return detail::coverage_of(a, s, /*closed=*/true).full();
}

/// True iff every item (including members of S) has a neighbor in S.
inline bool is_total_dominating(const AdjacencyStructure& a, std::span<const std::size_t> s) {
    return detail::coverage_of(a, s, /*closed=*/false).full();
}

/// Checks disjointness, full coverage and per-class (total-)domination.
/// Empty classes count as coverage failures. The witness reported for
/// a failing class is the first undominated item in index order.
inline ValidationReport validate_partition(const AdjacencyStructure& a,
                                           const DomaticPartition& p) {
    ValidationReport report;
    std::vector<std::size_t> occurrences(a.item_count, 0);
    bool coverage = true;
    for (const auto& cls : p.classes) {
        if (cls.empty()) coverage = false;
        for (std::size_t i : cls) {
            if (i >= a.item_count)
                fail(Errc::IndexOutOfRange, "item " + std::to_string(i) + " outside ground set");
            ++occurrences[i];
        }
    }
    for (std::size_t c : occurrences)
        if (c != 1) coverage = false;
    report.coverage_ok = coverage;

    for (std::size_t ci = 0; ci < p.classes.size(); ++ci) {
        Bitset cov = detail::coverage_of(a, p.classes[ci], /*closed=*/!p.total);
        if (!cov.full()) {
            std::size_t witness = 0;
            while (witness < a.item_count && cov.test(witness)) ++witness;
            report.failures.push_back(
                {ci, p.total ? FailureReason::NotTotalDominating : FailureReason::NotDominating,
                 witness});
        }
    }
    report.valid = report.coverage_ok && report.failures.empty();
    return report;
}

/// Minimum size of a (total-)dominating set, by increasing-size search with
/// neighborhood-cover pruning. Throws Infeasible for the total variant when
/// some item is isolated, BudgetExceeded past `node_limit`.
inline std::size_t domination_number(const AdjacencyStructure& a, bool total,
                                     std::optional<std::uint64_t> node_limit = {}) {
    if (a.item_count == 0) return 0;
    std::vector<Bitset> cov(a.item_count);  // items covered by picking i
    for (std::size_t i = 0; i < a.item_count; ++i) {
        cov[i] = a.neighbors[i];
        if (!total) cov[i].set(i);
    }
    if (total) {
        for (std::size_t i = 0; i < a.item_count; ++i)
            if (a.neighbors[i].none())
                fail(Errc::Infeasible,
                     "item " + std::to_string(i) + " is isolated; no total dominating set exists");
    }

    // Candidates that cover each item, strongest first.
    std::vector<std::size_t> order(a.item_count);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return cov[x].count() > cov[y].count(); });
    std::vector<std::vector<std::size_t>> coverers(a.item_count);
    for (std::size_t i : order)
        cov[i].for_each([&](std::size_t x) { coverers[x].push_back(i); });
    std::size_t max_cover = 0;
    for (std::size_t i = 0; i < a.item_count; ++i) max_cover = std::max(max_cover, cov[i].count());

    std::uint64_t nodes = 0;
    auto tick = [&] {
        if (node_limit && ++nodes > *node_limit)
            fail(Errc::BudgetExceeded, "domination_number exceeded node limit");
    };

    // Depth-limited: branch on the candidates covering the first uncovered item.
    std::function<bool(const Bitset&, std::size_t)> dfs = [&](const Bitset& uncovered,
                                                              std::size_t remaining) -> bool {
        if (uncovered.none()) return true;
        if (remaining == 0) return false;
        std::size_t need = (uncovered.count() + max_cover - 1) / max_cover;
        if (need > remaining) return false;
        std::size_t x = uncovered.first_set();
        for (std::size_t i : coverers[x]) {
            tick();
            Bitset next = uncovered;
            cov[i].for_each([&](std::size_t j) { next.reset(j); });
            if (dfs(next, remaining - 1)) return true;
        }
        return false;
    };

    Bitset all(a.item_count);
    for (std::size_t i = 0; i < a.item_count; ++i) all.set(i);
    for (std::size_t k = 1; k <= a.item_count; ++k)
        if (dfs(all, k)) return k;
    // Unreachable: picking every item dominates (total needs no isolated item,
    // checked above).
    fail(Errc::Infeasible, "no dominating set found");
}

}  // namespace hypdom
