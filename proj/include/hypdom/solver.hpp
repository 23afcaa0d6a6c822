#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "hypdom/adjacency.hpp"
#include "hypdom/domination.hpp"
#include "hypdom/error.hpp"
#include "hypdom/hypergraph.hpp"
#include "hypdom/partition.hpp"

namespace hypdom {

struct SolveBudget {
    std::optional<std::chrono::duration<double>> time_limit;
    std::optional<std::uint64_t> node_limit;
};

enum class UpperBoundKind {
    MinDegreeBound,  // delta_min + 1 (or delta_min for total) was tight
    GammaBound,      // floor(item_count / gamma) was tight
    TrivialBound,    // optimality proven by exhausting the search at value + 1
};

struct SolveResult {
    std::size_t value = 0;
    DomaticPartition witness;
    UpperBoundKind upper_bound_used = UpperBoundKind::TrivialBound;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
    bool optimal = true;  // false only when a budget cut the search short
};

namespace detail {

enum class TryOutcome { Found, Exhausted, Budget };

struct DomaticSearch {
    const AdjacencyStructure& a;
    bool total;
    std::optional<std::size_t> gamma;
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    std::size_t count = 0;
    std::vector<std::size_t> order;       // items by ascending degree
    std::vector<Bitset> contrib;          // coverage an item adds to its class
    std::vector<Bitset> suffix;           // potential coverage of items order[i..]
    std::vector<std::size_t> assignment;  // class of order[i]
    std::vector<Bitset> class_cov;
    std::vector<std::size_t> class_size;
    std::size_t k = 0, used = 0;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::vector<std::size_t>> forced_classes;
    bool forced_mode = false;

    explicit DomaticSearch(const AdjacencyStructure& adj, bool tot)
        : a(adj), total(tot), count(adj.item_count) {
        order.resize(count);
        for (std::size_t i = 0; i < count; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return a.neighbors[x].count() < a.neighbors[y].count();
        });
        contrib.assign(count, Bitset(count));
        for (std::size_t i = 0; i < count; ++i) {
            contrib[i] = a.neighbors[i];
            if (!total) contrib[i].set(i);
        }
        suffix.assign(count + 1, Bitset(count));
        for (std::size_t i = count; i-- > 0;) {
            suffix[i] = suffix[i + 1];
            suffix[i] |= contrib[order[i]];
        }
        assignment.resize(count);
    }

    bool budget_hit() {
        if (node_limit && nodes > *node_limit) return true;
        if (deadline && (nodes & 2047) == 0 &&
            std::chrono::steady_clock::now() > *deadline)
            return true;
        return false;
    }

    // Feasibility of a partition into exactly k (total-)dominating classes.
    // Items are assigned in `order`; class symmetry is broken by allowing at
    // most one new class per step, so the first solution found is the
    // lexicographically smallest assignment vector in that order. When the
    // class sizes are fully forced (k * gamma = item count) the search
    // switches to completing one class at a time, which follows the
    // exact-cover structure of those instances instead of thrashing on it.
    TryOutcome try_k(std::size_t classes) {
        k = classes;
        used = 0;
        forced_mode = gamma && k * *gamma == count;
        if (forced_mode) return try_k_forced();
        class_cov.assign(k, Bitset(count));
        class_size.assign(k, 0);
        return descend(0);
    }

    TryOutcome try_k_forced() {
        std::size_t g = *gamma;
        forced_classes.assign(k, {});
        std::vector<bool> assigned(count, false);
        // cnt[x] = how many unassigned items could still cover x; a partial
        // class is dead once some item is outside both its coverage and this
        // residual potential.
        std::vector<std::size_t> cnt(count, 0);
        for (std::size_t i = 0; i < count; ++i)
            contrib[i].for_each([&](std::size_t x) { ++cnt[x]; });

        auto take = [&](std::size_t i) {
            assigned[i] = true;
            contrib[i].for_each([&](std::size_t x) { --cnt[x]; });
        };
        auto put_back = [&](std::size_t i) {
            assigned[i] = false;
            contrib[i].for_each([&](std::size_t x) { ++cnt[x]; });
        };
        auto viable = [&](const Bitset& cov) {
            for (std::size_t x = 0; x < count; ++x)
                if (!cov.test(x) && cnt[x] == 0) return false;
            return true;
        };

        // Members of a class are chosen by ascending item index; the smallest
        // unassigned item always seeds the next class.
        auto rec = [&](auto&& self, std::size_t cls, const Bitset& cov, std::size_t last,
                       std::size_t picks_left) -> TryOutcome {
            if (picks_left == 0) {
                if (!cov.full()) return TryOutcome::Exhausted;
                if (cls + 1 == k) return TryOutcome::Found;
                std::size_t seed = 0;
                while (assigned[seed]) ++seed;
                ++nodes;
                if (budget_hit()) {
                    out_of_budget = true;
                    return TryOutcome::Budget;
                }
                take(seed);
                forced_classes[cls + 1].push_back(seed);
                TryOutcome sub = self(self, cls + 1, contrib[seed], seed, g - 1);
                if (sub != TryOutcome::Exhausted) return sub;
                forced_classes[cls + 1].pop_back();
                put_back(seed);
                return TryOutcome::Exhausted;
            }
            if (!viable(cov)) return TryOutcome::Exhausted;
            for (std::size_t i = last + 1; i + (picks_left - 1) < count; ++i) {
                if (assigned[i]) continue;
                ++nodes;
                if (budget_hit()) {
                    out_of_budget = true;
                    return TryOutcome::Budget;
                }
                take(i);
                forced_classes[cls].push_back(i);
                Bitset next = cov;
                next |= contrib[i];
                TryOutcome sub = self(self, cls, next, i, picks_left - 1);
                if (sub != TryOutcome::Exhausted) return sub;
                forced_classes[cls].pop_back();
                put_back(i);
            }
            return TryOutcome::Exhausted;
        };

        take(0);
        forced_classes[0].push_back(0);
        TryOutcome res = rec(rec, 0, contrib[0], 0, g - 1);
        if (res != TryOutcome::Found) forced_classes.clear();
        return res;
    }

    TryOutcome descend(std::size_t i) {
        std::size_t remaining = count - i;
        if (used < k && !suffix[i].full()) return TryOutcome::Exhausted;

        // Every class must reach at least gamma members (gamma = 1 when the
        // exact value is unknown). When the deficit equals the remaining item
        // count, every assignment must fill a needy class, so classes already
        // at gamma are frozen and must dominate with what they have.
        std::size_t g = gamma ? *gamma : 1;
        std::size_t deficit = (k - used) * g;
        for (std::size_t c = 0; c < used; ++c)
            if (class_size[c] < g) deficit += g - class_size[c];
        if (deficit > remaining) return TryOutcome::Exhausted;
        bool tight = deficit == remaining;

        for (std::size_t c = 0; c < used; ++c) {
            if (tight && class_size[c] >= g) {
                if (!class_cov[c].full()) return TryOutcome::Exhausted;
            } else if (!union_full(class_cov[c], suffix[i])) {
                return TryOutcome::Exhausted;
            }
        }
        if (i == count) return TryOutcome::Found;

        std::size_t v = order[i];
        std::size_t limit = std::min(used + 1, k);
        for (std::size_t c = 0; c < limit; ++c) {
            if (tight && c < used && class_size[c] >= g) continue;
            ++nodes;
            if (budget_hit()) {
                out_of_budget = true;
                return TryOutcome::Budget;
            }
            Bitset saved = class_cov[c];
            class_cov[c] |= contrib[v];
            ++class_size[c];
            std::size_t prev_used = used;
            used = std::max(used, c + 1);
            assignment[i] = c;

            TryOutcome sub = descend(i + 1);
            if (sub != TryOutcome::Exhausted) return sub;

            used = prev_used;
            --class_size[c];
            class_cov[c] = std::move(saved);
        }
        return TryOutcome::Exhausted;
    }

    std::vector<std::vector<std::size_t>> extract_classes() const {
        if (forced_mode) return forced_classes;  // built in ascending order already
        std::vector<std::vector<std::size_t>> classes(k);
        for (std::size_t i = 0; i < count; ++i) classes[assignment[i]].push_back(order[i]);
        for (auto& cls : classes) std::sort(cls.begin(), cls.end());
        return classes;
    }
};

}  // namespace detail

/// Maximum number of classes in a partition of the items into
/// (total-)dominating sets. Proof of optimality is feasibility at k combined
/// with the upper bound min(delta_min + 1 or delta_min, floor(count / gamma)),
/// or an exhausted search at k + 1. On budget exhaustion the best lower bound
/// found so far is returned with `optimal = false`.
inline SolveResult max_domatic(const AdjacencyStructure& a, bool total,
                               const SolveBudget& budget = {},
                               GroundSet ground = GroundSet::Vertex) {
    if (budget.time_limit && budget.time_limit->count() <= 0)
        fail(Errc::InvalidParams, "time limit must be positive");
    if (budget.node_limit && *budget.node_limit == 0)
        fail(Errc::InvalidParams, "node limit must be positive");
    if (a.item_count == 0) fail(Errc::InvalidParams, "need at least one item");

    auto start = std::chrono::steady_clock::now();
    const char* item_word = ground == GroundSet::Vertex ? "vertex" : "edge";
    if (total) {
        for (std::size_t i = 0; i < a.item_count; ++i)
            if (a.neighbors[i].none())
                fail(Errc::Infeasible, std::string(item_word) + " " + std::to_string(i) +
                                           " is isolated; no total dominating set exists");
    }

    std::size_t delta_min = a.item_count;
    for (std::size_t i = 0; i < a.item_count; ++i)
        delta_min = std::min(delta_min, a.neighbors[i].count());
    std::size_t ub_degree = total ? delta_min : delta_min + 1;

    // Exact gamma gives the class-count bound floor(count / gamma); skip it if
    // its own search would blow the budget and rely on the degree bound alone.
    std::optional<std::size_t> gamma;
    try {
        gamma = domination_number(a, total, budget.node_limit);
    } catch (const Error& e) {
        if (e.code() != Errc::BudgetExceeded) throw;
    }

    std::size_t ub = ub_degree;
    UpperBoundKind bound = UpperBoundKind::MinDegreeBound;
    if (gamma) {
        std::size_t ub_gamma = a.item_count / *gamma;
        if (ub_gamma < ub) {  // ties go to the degree certificate
            ub = ub_gamma;
            bound = UpperBoundKind::GammaBound;
        }
    }

    detail::DomaticSearch search(a, total);
    search.gamma = gamma;
    search.node_limit = budget.node_limit;
    if (budget.time_limit)
        search.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                      *budget.time_limit);

    SolveResult result;
    result.witness.kind = ground;
    result.witness.total = total;
    for (std::size_t k = ub; k >= 1; --k) {
        detail::TryOutcome outcome = search.try_k(k);
        if (outcome == detail::TryOutcome::Found) {
            result.value = k;
            result.witness.classes = search.extract_classes();
            result.upper_bound_used = (k == ub) ? bound : UpperBoundKind::TrivialBound;
            result.optimal = true;
            break;
        }
        if (outcome == detail::TryOutcome::Budget) {
            // Nothing feasible found while descending; the single-class
            // partition is always a valid lower bound here.
            result.value = 1;
            std::vector<std::size_t> everything(a.item_count);
            for (std::size_t i = 0; i < a.item_count; ++i) everything[i] = i;
            result.witness.classes = {std::move(everything)};
            result.optimal = false;
            break;
        }
    }
    result.nodes_explored = search.nodes;
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

inline SolveResult domatic_number(const Hypergraph& h, const SolveBudget& budget = {}) {
    return max_domatic(two_section(h), false, budget, GroundSet::Vertex);
}

inline SolveResult total_domatic_number(const Hypergraph& h, const SolveBudget& budget = {}) {
    return max_domatic(two_section(h), true, budget, GroundSet::Vertex);
}

inline SolveResult edge_domatic_number(const Hypergraph& h, const SolveBudget& budget = {}) {
    return max_domatic(line_graph(h), false, budget, GroundSet::Edge);
}

inline SolveResult total_edge_domatic_number(const Hypergraph& h, const SolveBudget& budget = {}) {
    return max_domatic(line_graph(h), true, budget, GroundSet::Edge);
}

/// Independent oracle: exhaustive enumeration of all set partitions via
/// restricted growth strings, checking every class. Capped at 12 items.
inline std::size_t brute_force_domatic(const AdjacencyStructure& a, bool total) {
    if (a.item_count == 0) fail(Errc::InvalidParams, "need at least one item");
    if (a.item_count > 12)
        fail(Errc::TooLarge, "brute force is capped at 12 items, got " +
                                 std::to_string(a.item_count));
    std::vector<std::uint32_t> cover(a.item_count, 0);
    for (std::size_t i = 0; i < a.item_count; ++i) {
        a.neighbors[i].for_each([&](std::size_t j) { cover[i] |= std::uint32_t{1} << j; });
        if (!total) cover[i] |= std::uint32_t{1} << i;
        if (total && cover[i] == 0)
            fail(Errc::Infeasible, "item " + std::to_string(i) +
                                       " is isolated; no total dominating set exists");
    }
    const std::uint32_t full = a.item_count == 32
                                   ? ~std::uint32_t{0}
                                   : (std::uint32_t{1} << a.item_count) - 1;

    std::size_t best = 0;
    std::vector<std::uint32_t> class_cov(a.item_count, 0);
    // Restricted growth: item i joins a class <= (number used so far).
    auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
        if (i == a.item_count) {
            if (used <= best) return;
            for (std::size_t c = 0; c < used; ++c)
                if (class_cov[c] != full) return;
            best = used;
            return;
        }
        std::size_t limit = std::min(used + 1, a.item_count);
        for (std::size_t c = 0; c < limit; ++c) {
            std::uint32_t saved = class_cov[c];
            class_cov[c] |= cover[i];
            self(self, i + 1, std::max(used, c + 1));
            class_cov[c] = saved;
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace hypdom
