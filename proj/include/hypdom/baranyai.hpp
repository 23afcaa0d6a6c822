#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <vector>

#include "hypdom/combinatorics.hpp"
#include "hypdom/error.hpp"

namespace hypdom {

/// A 1-factorization of the complete r-uniform hypergraph on [0, n): every
/// r-subset appears in exactly one factor, and every factor is a perfect
/// matching (n/r pairwise-disjoint edges covering all vertices).
struct Factorization {
    std::size_t n = 0, r = 0;
    std::vector<std::vector<std::vector<std::size_t>>> factors;
};

namespace detail {

// Minimal integral max-flow (BFS augmentation). Capacities are tiny here.
struct FlowNetwork {
    struct Arc {
        std::size_t to;
        std::int64_t cap;
        std::size_t rev;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNetwork(std::size_t nodes) : adj(nodes) {}

    void add_arc(std::size_t u, std::size_t v, std::int64_t cap) {
        adj[u].push_back({v, cap, adj[v].size()});
        adj[v].push_back({u, 0, adj[u].size() - 1});
    }

    std::int64_t max_flow(std::size_t s, std::size_t t) {
        std::int64_t total = 0;
        for (;;) {
            std::vector<std::pair<std::size_t, std::size_t>> parent(adj.size(),
                                                                    {SIZE_MAX, SIZE_MAX});
            std::queue<std::size_t> q;
            q.push(s);
            parent[s] = {s, 0};
            while (!q.empty() && parent[t].first == SIZE_MAX) {
                std::size_t u = q.front();
                q.pop();
                for (std::size_t i = 0; i < adj[u].size(); ++i) {
                    const Arc& arc = adj[u][i];
                    if (arc.cap > 0 && parent[arc.to].first == SIZE_MAX) {
                        parent[arc.to] = {u, i};
                        q.push(arc.to);
                    }
                }
            }
            if (parent[t].first == SIZE_MAX) return total;
            std::int64_t push = INT64_MAX;
            for (std::size_t v = t; v != s;) {
                auto [u, i] = parent[v];
                push = std::min(push, adj[u][i].cap);
                v = u;
            }
            for (std::size_t v = t; v != s;) {
                auto [u, i] = parent[v];
                adj[u][i].cap -= push;
                adj[adj[u][i].to][adj[u][i].rev].cap += push;
                v = u;
            }
            total += push;
        }
    }
};

}  // namespace detail

/// Constructs a Baranyai factorization for r | n by the inductive rounding
/// method. Vertices are introduced one at a time; after t steps each factor
/// slot holds disjoint partial edges over [0, t) (plus a count of edges not
/// yet started), and the invariant is that every j-subset P of [0, t) occurs
/// as a partial edge in exactly C(n-t, r-j) slots. Adding vertex t splits
/// that count binomially: exactly C(n-t-1, r-j-1) of P's holders must extend
/// their copy with t, and each slot extends exactly one of its edges. Picking
/// which slot extends what is an integral transportation problem; the
/// fractional solution (each partial edge grows with probability
/// (r-|e|)/(n-t)) is feasible, so an integral max flow saturates and the
/// invariant is preserved. At t = n every slot is a perfect matching.
inline Factorization baranyai(std::size_t n, std::size_t r) {
    if (r == 0 || n == 0 || n % r != 0)
        fail(Errc::InvalidParams, "baranyai needs r >= 1 and r | n, got n=" + std::to_string(n) +
                                      " r=" + std::to_string(r));
    std::size_t slots = static_cast<std::size_t>(binomial(n - 1, r - 1));
    std::size_t per_factor = n / r;

    std::vector<std::vector<std::vector<std::size_t>>> partial(slots);
    std::vector<std::size_t> unstarted(slots, per_factor);

    for (std::size_t t = 0; t < n; ++t) {
        // Group slots by the partial edges they hold (empty key = unstarted).
        std::map<std::vector<std::size_t>, std::vector<std::size_t>> holders;
        for (std::size_t s = 0; s < slots; ++s) {
            if (unstarted[s] > 0) holders[{}].push_back(s);
            for (const auto& e : partial[s])
                if (e.size() < r) holders[e].push_back(s);
        }

        std::size_t trace_count = holders.size();
        detail::FlowNetwork net(2 + slots + trace_count);
        std::size_t source = 0, sink = 1;
        for (std::size_t s = 0; s < slots; ++s) net.add_arc(source, 2 + s, 1);
        {
            std::size_t tn = 0;
            for (const auto& [trace, holder_list] : holders) {
                std::size_t j = trace.size();
                std::uint64_t demand = binomial(n - t - 1, r - j - 1);
                for (std::size_t s : holder_list) net.add_arc(2 + s, 2 + slots + tn, 1);
                net.add_arc(2 + slots + tn, sink, static_cast<std::int64_t>(demand));
                ++tn;
            }
        }
        if (net.max_flow(source, sink) != static_cast<std::int64_t>(slots))
            fail(Errc::SearchFailed, "baranyai flow did not saturate (internal invariant broken)");

        // Read off which trace each slot extends: the slot->trace arc that
        // ended up with zero residual capacity carries its unit of flow.
        std::vector<std::vector<std::size_t>> traces(trace_count);
        {
            std::size_t tn = 0;
            for (const auto& [trace, holder_list] : holders) traces[tn++] = trace;
        }
        for (std::size_t s = 0; s < slots; ++s) {
            for (const auto& arc : net.adj[2 + s]) {
                if (arc.to >= 2 + slots && arc.cap == 0) {
                    const auto& trace = traces[arc.to - 2 - slots];
                    if (trace.empty()) {
                        --unstarted[s];
                        partial[s].push_back({t});
                    } else {
                        for (auto& e : partial[s])
                            if (e == trace) {
                                e.push_back(t);
                                break;
                            }
                    }
                    break;
                }
            }
        }
    }

    Factorization f;
    f.n = n;
    f.r = r;
    f.factors.resize(slots);
    for (std::size_t s = 0; s < slots; ++s) {
        auto& factor = partial[s];
        std::sort(factor.begin(), factor.end());
        f.factors[s] = std::move(factor);
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

}  // namespace hypdom
