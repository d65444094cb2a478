#include "lchoose/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <future>
#include <map>
#include <sstream>

#include "lchoose/engine.hpp"
#include "lchoose/error.hpp"

namespace lchoose {

namespace {

struct DenseMap {
    std::vector<int> colors;  // dense index -> color
    std::map<int, int> index;

    explicit DenseMap(const std::vector<int>& universe) : colors(universe) {
        for (int i = 0; i < static_cast<int>(colors.size()); ++i) index[colors[i]] = i;
    }
};

engine::Problem list_problem(const Graph& g, const ListAssignment& a, const DenseMap& dm) {
    engine::Problem p;
    p.n = g.n;
    p.width = static_cast<int>(dm.colors.size());
    p.domains.assign(g.n, engine::Bits::empty(p.width));
    for (int v = 0; v < g.n; ++v)
        for (int c : a.lists[v]) p.domains[v].set(dm.index.at(c));
    for (auto [u, v] : g.edges) p.add_identity_edge(u, v);
    p.finalize();
    return p;
}

SearchVerdict run_engine(const engine::Problem& p, const SolveOptions& opts,
                         const std::vector<int>& palette) {
    engine::Options eo;
    eo.node_budget = opts.node_budget;
    eo.static_prefix = opts.static_prefix;
    auto res = engine::solve(p, eo);
    SearchVerdict v;
    v.nodes = res.nodes;
    v.prefix_completions = res.prefix_completions;
    switch (res.status) {
        case engine::Status::Sat: {
            v.status = SearchStatus::Colorable;
            Coloring c;
            for (auto x : res.values) c.values.push_back(palette.at(x));
            v.witness = std::move(c);
            break;
        }
        case engine::Status::Unsat: {
            v.status = SearchStatus::NotColorable;
            std::ostringstream os;
            os << "exhaustive backtracking closed the search space in " << res.nodes
               << " nodes; no proper coloring exists";
            v.certificate = os.str();
            break;
        }
        case engine::Status::Budget:
            v.status = SearchStatus::BudgetExhausted;
            break;
    }
    return v;
}

}  // namespace

SearchVerdict solve_list(const Graph& g, const ListAssignment& a, const SolveOptions& opts) {
    if (a.n() != g.n) throw std::invalid_argument("solve_list: list count != vertex count");
    for (int v = 0; v < g.n; ++v)
        if (a.lists[v].empty()) {
            SearchVerdict sv;
            sv.status = SearchStatus::NotColorable;
            sv.certificate = "vertex " + std::to_string(v) + " has an empty list";
            return sv;
        }
    DenseMap dm(a.color_universe());
    auto p = list_problem(g, a, dm);
    auto v = run_engine(p, opts, dm.colors);
    if (v.colorable() && (!is_proper(g, *v.witness) || !respects_lists(a, *v.witness)))
        throw std::logic_error("solve_list: witness failed verification");
    return v;
}

SearchVerdict solve_k(const Graph& g, int k, const SolveOptions& opts) {
    if (k < 0) throw std::invalid_argument("solve_k: negative k");
    if (g.n == 0) {
        SearchVerdict sv;
        sv.status = SearchStatus::Colorable;
        sv.witness = Coloring{};
        return sv;
    }
    if (k == 0) {
        SearchVerdict sv;
        sv.status = SearchStatus::NotColorable;
        sv.certificate = "no colors";
        return sv;
    }
    engine::Problem p;
    p.n = g.n;
    p.width = k;
    p.domains.assign(g.n, engine::Bits::full(k));
    // pin the first vertex's color to break the color-permutation symmetry
    p.domains[0] = engine::Bits::empty(k);
    p.domains[0].set(0);
    for (auto [u, v] : g.edges) p.add_identity_edge(u, v);
    p.finalize();
    std::vector<int> palette(k);
    for (int i = 0; i < k; ++i) palette[i] = i + 1;
    auto v = run_engine(p, opts, palette);
    if (v.colorable() && !is_proper(g, *v.witness))
        throw std::logic_error("solve_k: witness failed verification");
    return v;
}

SearchVerdict solve_list_edges(const Graph& g, const ListAssignment& edge_lists,
                               const SolveOptions& opts) {
    auto lg = line_graph(g);
    return solve_list(lg.graph, edge_lists, opts);
}

std::uint64_t count_colorings(const Graph& g, int k, std::uint64_t node_budget) {
    if (g.n > 30) throw std::invalid_argument("count_colorings: |V| > 30");
    if (k < 0) throw std::invalid_argument("count_colorings: negative k");
    if (g.n == 0) return 1;
    if (k == 0) return 0;
    engine::Problem p;
    p.n = g.n;
    p.width = k;
    p.domains.assign(g.n, engine::Bits::full(k));
    for (auto [u, v] : g.edges) p.add_identity_edge(u, v);
    p.finalize();
    return engine::count(p, node_budget);
}

std::vector<Coloring> enumerate_colorings(const Graph& g, int k, std::size_t limit) {
    std::vector<Coloring> out;
    if (g.n == 0 || k <= 0) {
        if (g.n == 0 && limit > 0) out.push_back(Coloring{});
        return out;
    }
    engine::Problem p;
    p.n = g.n;
    p.width = k;
    p.domains.assign(g.n, engine::Bits::full(k));
    for (auto [u, v] : g.edges) p.add_identity_edge(u, v);
    p.finalize();
    engine::enumerate(p, [&](const std::vector<std::int16_t>& vals) {
        Coloring c;
        for (auto x : vals) c.values.push_back(x + 1);
        out.push_back(std::move(c));
        return out.size() < limit;
    });
    return out;
}

namespace detail {

bool masks_colorable(int n, const std::vector<std::uint32_t>& adj,
                     const std::vector<std::uint64_t>& lists) {
    if (n == 0) return true;
    std::uint64_t work[32];
    for (int v = 0; v < n; ++v) work[v] = lists[v];
    std::uint64_t saved[32][32];  // [depth][vertex]

    struct Rec {
        int n;
        const std::vector<std::uint32_t>& adj;
        std::uint64_t* work;
        std::uint64_t (*saved)[32];

        bool go(std::uint32_t unassigned, int depth) {
            if (!unassigned) return true;
            int best = -1, best_count = 1 << 30;
            for (std::uint32_t m = unassigned; m; m &= m - 1) {
                int v = std::countr_zero(m);
                int c = std::popcount(work[v]);
                if (c == 0) return false;
                if (c < best_count) {
                    best_count = c;
                    best = v;
                }
            }
            std::uint32_t rest = unassigned & ~(1u << best);
            std::uint32_t nbrs = adj[best] & rest;
            std::uint64_t options = work[best];
            while (options) {
                std::uint64_t bit = options & (~options + 1);
                options ^= bit;
                bool dead = false;
                for (std::uint32_t m = nbrs; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    saved[depth][w] = work[w];
                    work[w] &= ~bit;
                    if (!work[w]) dead = true;
                }
                if (!dead && go(rest, depth + 1)) return true;
                for (std::uint32_t m = nbrs; m; m &= m - 1) {
                    int w = std::countr_zero(m);
                    work[w] = saved[depth][w];
                }
            }
            return false;
        }
    } rec{n, adj, work, saved};

    return rec.go((n >= 32) ? 0xffffffffu : ((1u << n) - 1), 0);
}

}  // namespace detail

LambdaDecision decide_lambda_choosable(const Graph& g, const IntPartition& lambda,
                                       const DecideOptions& opts) {
    LambdaDecision d;
    std::vector<std::uint32_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    EnumOptions eo;
    eo.budget_cells = opts.budget_cells;
    eo.max_assignments = opts.max_assignments;
    eo.special_units = true;

    std::optional<std::pair<std::vector<std::uint64_t>, EnumLayout>> failing;
    std::uint64_t checked = 0;

    auto check_one = [&](const std::vector<std::uint64_t>& rows) {
        return detail::masks_colorable(g.n, adj, rows);
    };

    try {
        if (opts.jobs <= 1) {
            for_each_lambda_assignment(g.n, lambda, eo,
                                       [&](const std::vector<std::uint64_t>& rows,
                                           const EnumLayout& layout) {
                                           ++checked;
                                           if (!check_one(rows)) {
                                               failing = {rows, layout};
                                               return false;
                                           }
                                           return true;
                                       });
        } else {
            // batch candidates, check a batch in parallel, keep the first
            // failing index; identical outcome to the sequential order
            const std::size_t batch_size = 4096;
            std::vector<std::pair<std::vector<std::uint64_t>, EnumLayout>> batch;
            auto flush = [&]() -> bool {  // true = found a counterexample
                if (batch.empty()) return false;
                int jobs = std::max(1, opts.jobs);
                std::vector<std::future<int>> futs;
                std::size_t chunk = (batch.size() + jobs - 1) / jobs;
                for (int j = 0; j < jobs; ++j) {
                    std::size_t lo = j * chunk, hi = std::min(batch.size(), lo + chunk);
                    if (lo >= hi) break;
                    futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
                        for (std::size_t i = lo; i < hi; ++i)
                            if (!check_one(batch[i].first)) return static_cast<int>(i);
                        return -1;
                    }));
                }
                int first = -1;
                for (auto& f : futs) {
                    int r = f.get();
                    if (r >= 0 && (first < 0 || r < first)) first = r;
                }
                checked += batch.size();
                if (first >= 0) {
                    checked -= batch.size() - (first + 1);
                    failing = batch[first];
                    batch.clear();
                    return true;
                }
                batch.clear();
                return false;
            };
            for_each_lambda_assignment(g.n, lambda, eo,
                                       [&](const std::vector<std::uint64_t>& rows,
                                           const EnumLayout& layout) {
                                           batch.push_back({rows, layout});
                                           if (batch.size() >= batch_size) return !flush();
                                           return true;
                                       });
            if (!failing) flush();
        }
    } catch (const BudgetError& e) {
        d.status = DecideStatus::Inconclusive;
        d.note = e.what();
        d.assignments_checked = checked;
        return d;
    }

    d.assignments_checked = checked;
    if (failing) {
        auto a = materialize_assignment(failing->first, failing->second, lambda);
        // cross-check the fast path against the engine before reporting
        auto verdict = solve_list(g, a.lists);
        if (verdict.colorable())
            throw std::logic_error("decide_lambda_choosable: fast path disagreed with engine");
        auto val = validate_lambda(a);
        if (!val.ok)
            throw std::logic_error("decide_lambda_choosable: counterexample invalid: " +
                                   val.message);
        d.status = DecideStatus::No;
        d.counterexample = std::move(a);
    } else {
        d.status = DecideStatus::Yes;
    }
    return d;
}

}  // namespace lchoose
