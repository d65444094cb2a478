#include "lchoose/engine.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "lchoose/error.hpp"

namespace lchoose::engine {

Bits Bits::full(int width) {
    Bits b;
    b.w.assign((width + 63) / 64, ~0ull);
    if (width & 63) b.w.back() = (1ull << (width & 63)) - 1;
    if (width == 0) b.w.assign(1, 0);
    return b;
}

Bits Bits::empty(int width) {
    Bits b;
    b.w.assign(std::max(1, (width + 63) / 64), 0ull);
    return b;
}

int Bits::count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
}

int Bits::first() const {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
    return -1;
}

bool Bits::any() const {
    for (auto x : w)
        if (x) return true;
    return false;
}

int Problem::add_perm(std::vector<std::int16_t> fwd) {
    perms.push_back(std::move(fwd));
    return static_cast<int>(perms.size()) - 1;
}

void Problem::finalize() {
    perms_inv.clear();
    for (const auto& p : perms) {
        if (static_cast<int>(p.size()) != width)
            throw std::invalid_argument("engine: perm width mismatch");
        std::vector<std::int16_t> inv(width, -1);
        for (int a = 0; a < width; ++a) {
            int b = p[a];
            if (b < 0 || b >= width || inv[b] != -1)
                throw std::invalid_argument("engine: perm is not a bijection");
            inv[b] = static_cast<std::int16_t>(a);
        }
        perms_inv.push_back(std::move(inv));
    }
}

namespace {

struct Searcher {
    const Problem& p;
    const Options& opts;
    std::vector<Bits> dom;
    std::vector<std::int16_t> value;
    std::vector<std::vector<std::pair<int, int>>> incident;  // vertex -> (con idx, side)
    std::uint64_t nodes = 0;
    std::uint64_t prefix_completions = 0;
    bool budget_hit = false;

    explicit Searcher(const Problem& prob, const Options& o) : p(prob), opts(o) {
        dom = p.domains;
        value.assign(p.n, -1);
        incident.resize(p.n);
        for (int c = 0; c < static_cast<int>(p.cons.size()); ++c) {
            incident[p.cons[c].u].push_back({c, 0});
            incident[p.cons[c].v].push_back({c, 1});
        }
    }

    bool over_budget() {
        if (opts.node_budget && nodes > opts.node_budget) {
            budget_hit = true;
            return true;
        }
        return false;
    }

    // forbidden value of the neighbor across constraint c when `from` has value a
    int forbidden(int c, int side_of_from, int a) const {
        const auto& con = p.cons[c];
        if (con.perm < 0) return a;
        return side_of_from == 0 ? p.perms[con.perm][a] : p.perms_inv[con.perm][a];
    }

    int neighbor(int c, int side_of_from) const {
        return side_of_from == 0 ? p.cons[c].v : p.cons[c].u;
    }

    // assign v=a and prune unassigned neighbors; record pruned vertices for
    // the singleton queue. false on wipeout.
    bool assign(int v, int a, std::vector<int>& touched) {
        value[v] = static_cast<std::int16_t>(a);
        for (auto [c, side] : incident[v]) {
            int w = neighbor(c, side);
            if (value[w] != -1) {
                if (value[w] == forbidden(c, side, a)) return false;
                continue;
            }
            int bad = forbidden(c, side, a);
            if (bad >= 0 && dom[w].test(bad)) {
                dom[w].reset(bad);
                if (!dom[w].any()) return false;
                touched.push_back(w);
            }
        }
        return true;
    }

    // propagate forced singletons among `vars`; appends every vertex it
    // assigns to `assigned`. false on conflict.
    bool propagate(const std::vector<int>& vars, std::vector<int>& assigned) {
        std::vector<int> queue;
        for (int v : vars)
            if (value[v] == -1 && dom[v].count() == 1) queue.push_back(v);
        std::vector<int> touched;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            if (value[v] != -1) continue;
            if (!dom[v].any()) return false;
            if (dom[v].count() != 1) continue;
            touched.clear();
            if (!assign(v, dom[v].first(), touched)) return false;
            assigned.push_back(v);
            for (int w : touched)
                if (value[w] == -1 && dom[w].count() == 1) queue.push_back(w);
        }
        return true;
    }

    std::vector<std::vector<int>> split(const std::vector<int>& vars) {
        std::vector<int> id(p.n, -1);
        for (int v : vars) id[v] = 0;
        std::vector<std::vector<int>> comps;
        std::vector<int> seen(p.n, 0);
        for (int s : vars) {
            if (seen[s]) continue;
            comps.emplace_back();
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comps.back().push_back(v);
                for (auto [c, side] : incident[v]) {
                    int w = neighbor(c, side);
                    if (id[w] == 0 && !seen[w] && value[w] == -1) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(comps.back().begin(), comps.back().end());
        }
        return comps;
    }

    // solve the subproblem on `vars` (all unassigned); leaves assignments in
    // `value` on success, restores domains and values on failure.
    bool solve_vars(std::vector<int> vars) {
        vars.erase(std::remove_if(vars.begin(), vars.end(),
                                  [&](int v) { return value[v] != -1; }),
                   vars.end());
        if (vars.empty()) return true;

        std::vector<int> forced;
        std::vector<Bits> dom_save;
        for (int v : vars) dom_save.push_back(dom[v]);
        // every var is unassigned here; on failure, undo anything the
        // propagation or the per-component solves assigned below us
        auto restore = [&]() {
            for (size_t i = 0; i < vars.size(); ++i) {
                value[vars[i]] = -1;
                dom[vars[i]] = dom_save[i];
            }
        };
        if (!propagate(vars, forced)) {
            restore();
            return false;
        }
        std::vector<int> rest;
        for (int v : vars)
            if (value[v] == -1) rest.push_back(v);
        if (rest.empty()) return true;

        auto comps = split(rest);
        if (comps.size() > 1) {
            for (auto& comp : comps)
                if (!solve_comp(comp)) {
                    restore();
                    return false;
                }
            return true;
        }
        if (!solve_comp(comps[0])) {
            restore();
            return false;
        }
        return true;
    }

    bool solve_comp(const std::vector<int>& comp) {
        // min remaining domain, ties by vertex index
        int best = -1, best_size = 1 << 30;
        for (int v : comp) {
            int s = dom[v].count();
            if (s < best_size) {
                best_size = s;
                best = v;
            }
        }
        if (best < 0) return true;
        Bits options = dom[best];
        std::vector<int> touched;
        for (int a = 0; a < p.width; ++a) {
            if (!options.test(a)) continue;
            if (over_budget()) return false;
            ++nodes;
            std::vector<Bits> dom_save;
            for (int v : comp) dom_save.push_back(dom[v]);
            touched.clear();
            bool ok = assign(best, a, touched);
            if (ok) {
                std::vector<int> others;
                for (int v : comp)
                    if (v != best) others.push_back(v);
                if (solve_vars(std::move(others))) return true;
            }
            value[best] = -1;
            for (size_t i = 0; i < comp.size(); ++i) dom[comp[i]] = dom_save[i];
            if (budget_hit) return false;
        }
        return false;
    }

    // DFS over the static prefix in order, then the general machinery.
    bool solve_prefix(size_t idx, const std::vector<int>& rest) {
        if (idx == opts.static_prefix.size()) {
            ++prefix_completions;
            return solve_vars(rest);
        }
        int v = opts.static_prefix[idx];
        if (value[v] != -1) return solve_prefix(idx + 1, rest);
        Bits options = dom[v];
        std::vector<int> touched;
        for (int a = 0; a < p.width; ++a) {
            if (!options.test(a)) continue;
            if (over_budget()) return false;
            ++nodes;
            std::vector<Bits> dom_save = dom;  // prefix levels are few; keep it simple
            touched.clear();
            bool ok = assign(v, a, touched);
            if (ok && solve_prefix(idx + 1, rest)) return true;
            value[v] = -1;
            dom = std::move(dom_save);
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

Result solve(const Problem& p, const Options& opts) {
    for (int v = 0; v < p.n; ++v)
        if (!p.domains[v].any() && p.n > 0) {
            Result r;
            r.status = Status::Unsat;
            return r;
        }
    Searcher s(p, opts);
    std::vector<int> in_prefix(p.n, 0);
    for (int v : opts.static_prefix) in_prefix[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < p.n; ++v)
        if (!in_prefix[v]) rest.push_back(v);
    bool sat = s.solve_prefix(0, rest);
    Result r;
    r.nodes = s.nodes;
    r.prefix_completions = s.prefix_completions;
    if (sat) {
        r.status = Status::Sat;
        r.values = s.value;
    } else {
        r.status = s.budget_hit ? Status::Budget : Status::Unsat;
    }
    return r;
}

namespace {

struct Walker {
    const Problem& p;
    std::vector<Bits> dom;
    std::vector<std::int16_t> value;
    std::vector<std::vector<std::pair<int, int>>> incident;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    std::uint64_t found = 0;
    const std::function<bool(const std::vector<std::int16_t>&)>* visit = nullptr;

    explicit Walker(const Problem& prob) : p(prob) {
        dom = p.domains;
        value.assign(p.n, -1);
        incident.resize(p.n);
        for (int c = 0; c < static_cast<int>(p.cons.size()); ++c) {
            incident[p.cons[c].u].push_back({c, 0});
            incident[p.cons[c].v].push_back({c, 1});
        }
    }

    bool allowed(int v, int a) const {
        for (auto [c, side] : incident[v]) {
            const auto& con = p.cons[c];
            int w = side == 0 ? con.v : con.u;
            if (value[w] == -1) continue;
            int wa = value[w];
            int bad_for_v;
            if (con.perm < 0)
                bad_for_v = wa;
            else
                bad_for_v = side == 0 ? p.perms_inv[con.perm][wa] : p.perms[con.perm][wa];
            if (a == bad_for_v) return false;
        }
        return true;
    }

    // returns false if the visitor stopped the walk
    bool rec(int v) {
        if (v == p.n) {
            ++found;
            return visit ? (*visit)(value) : true;
        }
        for (int a = 0; a < p.width; ++a) {
            if (!dom[v].test(a)) continue;
            if (budget && ++nodes > budget) throw BudgetError("engine: count budget exceeded");
            if (!allowed(v, a)) continue;
            value[v] = static_cast<std::int16_t>(a);
            if (!rec(v + 1)) {
                value[v] = -1;
                return false;
            }
            value[v] = -1;
        }
        return true;
    }
};

}  // namespace

std::uint64_t count(const Problem& p, std::uint64_t node_budget) {
    Walker w(p);
    w.budget = node_budget;
    w.rec(0);
    return w.found;
}

std::uint64_t enumerate(const Problem& p,
                        const std::function<bool(const std::vector<std::int16_t>&)>& visit) {
    Walker w(p);
    w.visit = &visit;
    w.rec(0);
    return w.found;
}

}  // namespace lchoose::engine
