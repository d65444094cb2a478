// Test-only independent oracles. These deliberately avoid the library's
// search engine and enumeration code paths.
#ifndef LCHOOSE_TESTS_ORACLES_HPP
#define LCHOOSE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "lchoose/assignment.hpp"
#include "lchoose/graph.hpp"

namespace oracles {

// Plain product-space search: try every map v -> lists[v] in order.
inline bool naive_list_colorable(const lchoose::Graph& g,
                                 const std::vector<std::vector<int>>& lists) {
    std::vector<int> pick(g.n, 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == g.n) return true;
        for (int c : lists[v]) {
            bool ok = true;
            for (int w : g.adj[v])
                if (w < v && pick[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick[v] = c;
            if (rec(v + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

inline bool naive_k_colorable(const lchoose::Graph& g, int k) {
    std::vector<int> palette(k);
    for (int i = 0; i < k; ++i) palette[i] = i + 1;
    return naive_list_colorable(g, std::vector<std::vector<int>>(g.n, palette));
}

// k-choosability by full enumeration of k-subsets over a fixed universe.
// The first vertex's list is pinned to {1..k}, which only normalizes color
// names. Feasible for tiny n and k.
inline bool naive_k_choosable(const lchoose::Graph& g, int k, int universe) {
    if (g.n == 0) return true;
    std::vector<int> colors(universe);
    for (int i = 0; i < universe; ++i) colors[i] = i + 1;
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int i = start; i < universe; ++i) {
            cur.push_back(colors[i]);
            gen(i + 1);
            cur.pop_back();
        }
    };
    gen(0);
    std::vector<std::vector<int>> lists(g.n);
    lists[0] = subsets[0];  // {1..k}
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == g.n) return naive_list_colorable(g, lists);
        for (const auto& s : subsets) {
            lists[v] = s;
            if (!rec(v + 1)) return false;
        }
        return true;
    };
    return rec(1);
}

// All labeled graphs on n vertices.
inline std::vector<lchoose::Graph> all_labeled_graphs(int n) {
    std::vector<lchoose::Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back({u, v});
    std::vector<lchoose::Graph> out;
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
        std::vector<lchoose::Edge> e;
        for (size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) e.push_back(slots[i]);
        out.push_back(lchoose::Graph(n, std::move(e)));
    }
    return out;
}

// Non-isomorphic graphs on exactly n vertices (brute-force canonical forms).
inline std::vector<lchoose::Graph> nonisomorphic_graphs(int n) {
    std::set<std::vector<lchoose::Edge>> seen;
    std::vector<lchoose::Graph> out;
    for (auto& g : all_labeled_graphs(n)) {
        auto cf = lchoose::canonical_form(g);
        if (seen.insert(cf).second) out.push_back(lchoose::Graph(n, cf));
    }
    return out;
}

}  // namespace oracles

#endif
