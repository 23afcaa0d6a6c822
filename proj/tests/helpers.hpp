#pragma once

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypdom/hypdom.hpp"

namespace testutil {

inline hypdom::AdjacencyStructure complete_graph(std::size_t k) {
    hypdom::AdjacencyStructure a(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) a.link(i, j);
    return a;
}

inline hypdom::AdjacencyStructure path_graph(std::size_t k) {
    hypdom::AdjacencyStructure a(k);
    for (std::size_t i = 0; i + 1 < k; ++i) a.link(i, i + 1);
    return a;
}

// Exhaustive minimum (total-)dominating set size, written against the raw
// neighbor sets so it shares nothing with the library's search.
inline std::size_t oracle_gamma(const hypdom::AdjacencyStructure& a, bool total) {
    std::size_t n = a.item_count;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        for (;;) {
            std::vector<bool> covered(n, false);
            for (std::size_t i : pick) {
                if (!total) covered[i] = true;
                a.neighbors[i].for_each([&](std::size_t j) { covered[j] = true; });
            }
            if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) return k;
            // next combination
            std::size_t i = k;
            while (i-- > 0) {
                if (pick[i] + (k - i) < n) {
                    ++pick[i];
                    for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                    break;
                }
                if (i == 0) goto next_k;
            }
        }
    next_k:;
    }
    return n + 1;  // no dominating set (total variant with an isolated item)
}

// Edge domination checked directly on the hypergraph: edges are adjacent iff
// they share a vertex.
inline bool direct_edge_dominates(const hypdom::Hypergraph& h,
                                  const std::vector<std::size_t>& s, bool total) {
    auto intersects = [&](std::size_t i, std::size_t j) {
        std::vector<std::size_t> tmp;
        std::set_intersection(h.edges[i].begin(), h.edges[i].end(), h.edges[j].begin(),
                              h.edges[j].end(), std::back_inserter(tmp));
        return !tmp.empty();
    };
    for (std::size_t e = 0; e < h.m(); ++e) {
        bool in_s = std::find(s.begin(), s.end(), e) != s.end();
        if (!total && in_s) continue;
        bool dominated = false;
        for (std::size_t d : s)
            if (d != e && intersects(e, d)) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

inline hypdom::Hypergraph random_hypergraph(std::mt19937& rng, std::size_t max_n = 8,
                                            std::size_t max_m = 8) {
    std::uniform_int_distribution<std::size_t> nd(1, max_n);
    std::size_t n = nd(rng);
    std::uniform_int_distribution<std::size_t> md(1, max_m);
    std::size_t target = md(rng);
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> edges;
    std::uniform_int_distribution<std::size_t> sized(1, n);
    std::uniform_int_distribution<std::size_t> vd(0, n - 1);
    for (std::size_t attempts = 0; edges.size() < target && attempts < 8 * target; ++attempts) {
        std::size_t size = sized(rng);
        std::set<std::size_t> verts;
        while (verts.size() < size) verts.insert(vd(rng));
        std::vector<std::size_t> e(verts.begin(), verts.end());
        if (seen.insert(e).second) edges.push_back(std::move(e));
    }
    return hypdom::make_hypergraph(n, std::move(edges));
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command, capturing stdout (stderr folded in).
inline CliResult run_command(const std::string& command) {
    CliResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace testutil
