#include "lchoose/assignment.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "lchoose/error.hpp"

namespace lchoose {

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.values.size()) != g.n) return false;
    for (auto [u, v] : g.edges)
        if (c.values[u] == c.values[v]) return false;
    return true;
}

ListAssignment::ListAssignment(std::vector<std::vector<int>> l) : lists(std::move(l)) {
    for (auto& lst : lists) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
}

bool ListAssignment::uniform_size(int k) const {
    return std::all_of(lists.begin(), lists.end(),
                       [k](const auto& l) { return static_cast<int>(l.size()) == k; });
}

std::vector<int> ListAssignment::color_universe() const {
    std::set<int> u;
    for (const auto& l : lists) u.insert(l.begin(), l.end());
    return {u.begin(), u.end()};
}

bool respects_lists(const ListAssignment& a, const Coloring& c) {
    if (c.values.size() != a.lists.size()) return false;
    for (size_t v = 0; v < c.values.size(); ++v)
        if (!std::binary_search(a.lists[v].begin(), a.lists[v].end(), c.values[v])) return false;
    return true;
}

int list_complexity(const ListAssignment& a) {
    std::set<std::vector<int>> distinct(a.lists.begin(), a.lists.end());
    return static_cast<int>(distinct.size());
}

ValidationResult validate_lambda(const LambdaAssignment& a) {
    const int q = a.partition.q();
    if (static_cast<int>(a.groups.size()) != q)
        return {false, "group count != partition part count"};
    std::map<int, int> owner;
    for (int i = 0; i < q; ++i)
        for (int c : a.groups[i]) {
            auto [it, fresh] = owner.insert({c, i});
            if (!fresh)
                return {false, "groups " + std::to_string(it->second) + " and " +
                                   std::to_string(i) + " overlap at color " + std::to_string(c)};
        }
    for (int v = 0; v < a.lists.n(); ++v)
        for (int c : a.lists.lists[v])
            if (!owner.count(c))
                return {false, "vertex " + std::to_string(v) + " uses color " +
                                   std::to_string(c) + " outside all groups"};
    for (int v = 0; v < a.lists.n(); ++v) {
        std::vector<int> hits(q, 0);
        for (int c : a.lists.lists[v]) ++hits[owner[c]];
        for (int i = 0; i < q; ++i)
            if (hits[i] != a.partition.parts[i])
                return {false, "vertex " + std::to_string(v) + " meets group " +
                                   std::to_string(i) + " in " + std::to_string(hits[i]) +
                                   " colors, expected " + std::to_string(a.partition.parts[i])};
    }
    return {true, ""};
}

Coloring TransferMap::apply(const Coloring& c) const {
    Coloring out = c;
    for (size_t v = 0; v < c.values.size() && v < vertex_map.size(); ++v) {
        auto it = vertex_map[v].find(c.values[v]);
        if (it != vertex_map[v].end()) out.values[v] = it->second;
    }
    return out;
}

SpecializeResult specialize(const LambdaAssignment& a) {
    auto val = validate_lambda(a);
    if (!val.ok) throw std::invalid_argument("specialize: invalid assignment: " + val.message);
    const int n = a.lists.n();
    SpecializeResult r;
    r.specialized = a;
    r.back.description = "unit groups collapsed to shared colors";
    r.back.vertex_map.assign(n, {});
    for (int i = 0; i < a.partition.q(); ++i) {
        if (a.partition.parts[i] != 1) continue;
        const auto& grp = a.groups[i];
        // the unique group color of each vertex; shared color is the common one
        // when they already coincide, otherwise the smallest used
        std::vector<int> unit(n);
        for (int v = 0; v < n; ++v)
            for (int c : a.lists.lists[v])
                if (std::binary_search(grp.begin(), grp.end(), c)) unit[v] = c;
        int shared = *std::min_element(unit.begin(), unit.end());
        for (int v = 0; v < n; ++v) {
            auto& lst = r.specialized.lists.lists[v];
            std::vector<int> next;
            for (int c : lst)
                if (!std::binary_search(grp.begin(), grp.end(), c)) next.push_back(c);
            next.push_back(shared);
            std::sort(next.begin(), next.end());
            lst = std::move(next);
            if (unit[v] != shared) r.back.vertex_map[v][shared] = unit[v];
        }
        r.specialized.groups[i] = {shared};
    }
    return r;
}

bool is_symmetric(const ListAssignment& a) {
    for (const auto& l : a.lists)
        for (int c : l) {
            if (c == 0) return false;
            if (!std::binary_search(l.begin(), l.end(), -c)) return false;
        }
    return true;
}

ListAssignment symmetric_to_plain(const SymmetricAssignment& a) { return a.lists; }

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

using Col = std::pair<std::uint32_t, int>;  // (column mask, multiplicity)
using Path = std::vector<Col>;

struct EnumState {
    int n;
    std::uint64_t leaves = 0;
    std::uint64_t work = 0;
    std::uint64_t max_leaves;
    std::uint64_t max_work;
    const IntPartition* lambda;
    bool special_units;
    std::vector<Path> group_paths;
    const std::function<bool(const std::vector<std::uint64_t>&, const EnumLayout&)>* visit;
    bool stopped = false;

    void tick() {
        if (++work > max_work) throw BudgetError("lambda enumeration: work budget exceeded");
    }

    bool leaf() {
        if (++leaves > max_leaves)
            throw BudgetError("lambda enumeration: assignment budget exceeded");
        EnumLayout layout;
        layout.n = n;
        layout.group_begin.push_back(0);
        int palette = 0;
        for (const auto& p : group_paths) {
            for (const auto& [col, m] : p) palette += m;
            layout.group_begin.push_back(palette);
        }
        layout.palette = palette;
        std::vector<std::uint64_t> rows(n, 0);
        int color = 0;
        for (const auto& p : group_paths)
            for (const auto& [col, m] : p)
                for (int t = 0; t < m; ++t) {
                    for (int v = 0; v < n; ++v)
                        if (col >> v & 1u) rows[v] |= 1ull << color;
                    ++color;
                }
        if (!(*visit)(rows, layout)) {
            stopped = true;
            return false;
        }
        return true;
    }

    bool run_group(int gi);

    // DFS over column multisets for group gi. bound, when non-null, caps the
    // path lexicographically (tight = still equal to the bound prefix).
    bool group_dfs(int gi, int k, std::uint32_t prev_col, std::vector<int>& demand, Path& path,
                   const Path* bound, bool tight) {
        bool done = true;
        for (int v = 0; v < n; ++v)
            if (demand[v] > 0) {
                done = false;
                break;
            }
        if (done) {
            group_paths[gi] = path;
            return run_group(gi + 1);
        }
        if (tight && bound && path.size() >= bound->size()) return true;  // would exceed bound
        std::uint32_t active = 0;
        for (int v = 0; v < n; ++v)
            if (demand[v] > 0) active |= 1u << v;
        // descending nonempty submasks of active
        for (std::uint32_t c = active;; c = (c - 1) & active) {
            tick();
            if (c == 0) break;
            if (c < prev_col || prev_col == 0) {
                if (tight && bound && c > (*bound)[path.size()].first) {
                    // still above the bound column: skip
                } else {
                    int maxm = demand[std::countr_zero(c)];
                    for (int v = 0; v < n; ++v)
                        if (c >> v & 1u) maxm = std::min(maxm, demand[v]);
                    for (int m = maxm; m >= 1; --m) {
                        bool next_tight = false;
                        if (tight && bound) {
                            auto [bc, bm] = (*bound)[path.size()];
                            if (c == bc) {
                                if (m > bm) continue;
                                next_tight = (m == bm);
                            }
                        }
                        for (int v = 0; v < n; ++v)
                            if (c >> v & 1u) demand[v] -= m;
                        path.push_back({c, m});
                        bool keep = group_dfs(gi, k, c, demand, path, bound, next_tight);
                        path.pop_back();
                        for (int v = 0; v < n; ++v)
                            if (c >> v & 1u) demand[v] += m;
                        if (!keep) return false;
                    }
                }
            }
        }
        return true;
    }
};

bool EnumState::run_group(int gi) {
    const auto& parts = lambda->parts;
    if (gi == static_cast<int>(parts.size())) return leaf();
    int k = parts[gi];
    if (n == 0) {
        group_paths[gi] = {};
        return run_group(gi + 1);
    }
    std::uint32_t all = (n >= 32) ? 0xffffffffu : ((1u << n) - 1);
    if (special_units && k == 1) {
        group_paths[gi] = {{all, 1}};
        return run_group(gi + 1);
    }
    const Path* bound = nullptr;
    if (gi > 0 && parts[gi - 1] == k && !(special_units && k == 1)) bound = &group_paths[gi - 1];
    std::vector<int> demand(n, k);
    Path path;
    return group_dfs(gi, k, 0, demand, path, bound, bound != nullptr);
}

}  // namespace

bool for_each_lambda_assignment(int n, const IntPartition& lambda, const EnumOptions& opts,
                                const std::function<bool(const std::vector<std::uint64_t>&,
                                                         const EnumLayout&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumeration: negative n");
    if (opts.budget_cells > 64)
        throw std::invalid_argument("enumeration: budget_cells capped at 64");
    if (n > 31) throw std::invalid_argument("enumeration: n too large");
    const long long cells = static_cast<long long>(n) * lambda.total();
    if (cells > opts.budget_cells)
        throw BudgetError("lambda enumeration: n*k = " + std::to_string(cells) +
                          " exceeds budget of " + std::to_string(opts.budget_cells) +
                          " cells");
    EnumState st;
    st.n = n;
    st.max_leaves = opts.max_assignments;
    st.max_work = 256 * opts.max_assignments + 10'000'000;
    st.lambda = &lambda;
    st.special_units = opts.special_units;
    st.group_paths.resize(lambda.q());
    st.visit = &visit;
    st.run_group(0);
    return !st.stopped;
}

LambdaAssignment materialize_assignment(const std::vector<std::uint64_t>& rows,
                                        const EnumLayout& layout, const IntPartition& lambda) {
    LambdaAssignment a;
    a.partition = lambda;
    a.lists.lists.resize(layout.n);
    for (int v = 0; v < layout.n; ++v)
        for (int c = 0; c < layout.palette; ++c)
            if (rows[v] >> c & 1ull) a.lists.lists[v].push_back(c + 1);
    for (int i = 0; i + 1 < static_cast<int>(layout.group_begin.size()); ++i) {
        std::vector<int> grp;
        for (int c = layout.group_begin[i]; c < layout.group_begin[i + 1]; ++c)
            grp.push_back(c + 1);
        a.groups.push_back(std::move(grp));
    }
    return a;
}

std::vector<LambdaAssignment> enumerate_lambda_assignments(const Graph& g,
                                                           const IntPartition& lambda,
                                                           const EnumOptions& opts) {
    std::vector<LambdaAssignment> out;
    for_each_lambda_assignment(g.n, lambda, opts,
                               [&](const std::vector<std::uint64_t>& rows, const EnumLayout& la) {
                                   out.push_back(materialize_assignment(rows, la, lambda));
                                   return true;
                               });
    return out;
}

}  // namespace lchoose
