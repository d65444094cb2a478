#include "lchoose/gsg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>

#include "lchoose/engine.hpp"
#include "lchoose/error.hpp"

namespace lchoose {

Permutation Permutation::identity(int k) {
    Permutation p;
    p.img.resize(k);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img.assign(img.size(), 0);
    for (int i = 0; i < k(); ++i) p.img[img[i]] = i;
    return p;
}

Permutation Permutation::compose(const Permutation& inner) const {
    Permutation p;
    p.img.resize(img.size());
    for (int i = 0; i < k(); ++i) p.img[i] = img[inner.img[i]];
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < k(); ++i)
        if (img[i] != i) return false;
    return true;
}

std::string Permutation::str() const {
    std::vector<int> seen(img.size(), 0);
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < k(); ++i) {
        if (seen[i] || img[i] == i) continue;
        os << '(';
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            os << (j + 1);
            j = img[j];
        }
        os << ')';
        any = true;
    }
    return any ? os.str() : "id";
}

Permutation Permutation::parse(const std::string& s, int k) {
    Permutation p = identity(k);
    if (s == "id" || s == "()" || s.empty()) return p;
    if (s.find('(') == std::string::npos) {
        // image list "2,1,4,3"
        std::vector<int> img;
        std::string cur;
        auto flush = [&] {
            if (cur.empty()) throw std::invalid_argument("permutation: empty image");
            img.push_back(std::stoi(cur) - 1);
            cur.clear();
        };
        for (char c : s) {
            if (c == ',')
                flush();
            else if (c >= '0' && c <= '9')
                cur.push_back(c);
            else if (c != ' ')
                throw std::invalid_argument("permutation: bad character in image list");
        }
        flush();
        if (static_cast<int>(img.size()) != k)
            throw std::invalid_argument("permutation: image list length != k");
        Permutation q;
        q.img = img;
        if (!(q.compose(q.inverse()) == identity(k)))
            throw std::invalid_argument("permutation: not a bijection");
        return q;
    }
    // cycle notation; single digits only, enough for k <= 9
    size_t i = 0;
    std::vector<int> used(k, 0);
    while (i < s.size()) {
        if (s[i] == ' ') {
            ++i;
            continue;
        }
        if (s[i] != '(') throw std::invalid_argument("permutation: expected '('");
        ++i;
        std::vector<int> cyc;
        while (i < s.size() && s[i] != ')') {
            if (s[i] < '1' || s[i] > '9')
                throw std::invalid_argument("permutation: cycle entries are digits 1..9");
            int v = s[i] - '1';
            if (v >= k) throw std::invalid_argument("permutation: entry exceeds k");
            if (used[v]) throw std::invalid_argument("permutation: repeated entry");
            used[v] = 1;
            cyc.push_back(v);
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("permutation: missing ')'");
        ++i;
        for (size_t t = 0; t < cyc.size(); ++t) p.img[cyc[t]] = cyc[(t + 1) % cyc.size()];
    }
    return p;
}

PermSet::PermSet(int k_, std::vector<Permutation> m) : k(k_), members(std::move(m)) {
    for (const auto& p : members)
        if (p.k() != k) throw std::invalid_argument("perm set: mixed degrees");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw std::invalid_argument("perm set: empty");
}

bool PermSet::contains(const Permutation& p) const {
    return std::binary_search(members.begin(), members.end(), p);
}

bool PermSet::is_inverse_closed() const {
    return std::all_of(members.begin(), members.end(),
                       [&](const Permutation& p) { return contains(p.inverse()); });
}

bool PermSet::is_group() const {
    for (const auto& a : members)
        for (const auto& b : members)
            if (!contains(a.compose(b))) return false;
    return true;
}

PermSet conjugate(const PermSet& s, const Permutation& pi) {
    std::vector<Permutation> out;
    auto inv = pi.inverse();
    for (const auto& p : s.members) out.push_back(pi.compose(p).compose(inv));
    return PermSet(s.k, std::move(out));
}

bool fixes_each_point(const PermSet& s) {
    for (int i = 0; i < s.k; ++i) {
        bool fixed = false;
        for (const auto& p : s.members)
            if (p.img[i] == i) {
                fixed = true;
                break;
            }
        if (!fixed) return false;
    }
    return true;
}

PermSet symmetric_group(int k) {
    if (k > 6) throw std::invalid_argument("symmetric_group: k <= 6");
    std::vector<int> img(k);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        Permutation p;
        p.img = img;
        out.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
    return PermSet(k, std::move(out));
}

YoungSet young_set(const IntPartition& lambda) {
    int k = lambda.total();
    if (k > 8) throw std::invalid_argument("young_set: total <= 8");
    YoungSet y;
    y.partition = lambda;
    int s = 0;
    for (int part : lambda.parts) {
        y.intervals.push_back({s, s + part});
        s += part;
    }
    // product of per-block permutations
    std::vector<Permutation> members{Permutation::identity(k)};
    for (auto [b, e] : y.intervals) {
        std::vector<int> block(e - b);
        std::iota(block.begin(), block.end(), b);
        std::vector<std::vector<int>> arrangements;
        std::vector<int> arr = block;
        do arrangements.push_back(arr);
        while (std::next_permutation(arr.begin(), arr.end()));
        std::vector<Permutation> next;
        for (const auto& base : members)
            for (const auto& a : arrangements) {
                Permutation p = base;
                for (int i = b; i < e; ++i) p.img[i] = a[i - b];
                next.push_back(p);
            }
        members = std::move(next);
    }
    y.perms = PermSet(k, std::move(members));
    return y;
}

PermSignature::PermSignature(Graph g, int k_, std::vector<Permutation> f)
    : graph(std::move(g)), k(k_), fwd(std::move(f)) {
    if (fwd.size() != graph.edges.size())
        throw std::invalid_argument("signature: one permutation per edge");
    for (const auto& p : fwd)
        if (p.k() != k) throw std::invalid_argument("signature: permutation degree != k");
}

Permutation PermSignature::arc(int from, int to) const {
    int e = graph.edge_index(from, to);
    if (e < 0) throw std::invalid_argument("signature: no such edge");
    return from < to ? fwd[e] : fwd[e].inverse();
}

SearchVerdict solve_gsg(const PermSignature& sig, const SolveOptions& opts) {
    engine::Problem p;
    p.n = sig.graph.n;
    p.width = sig.k;
    p.domains.assign(p.n, engine::Bits::full(sig.k));
    for (int e = 0; e < sig.graph.m(); ++e) {
        auto [u, v] = sig.graph.edges[e];
        if (sig.fwd[e].is_identity()) {
            p.add_identity_edge(u, v);
        } else {
            std::vector<std::int16_t> t(sig.k);
            for (int a = 0; a < sig.k; ++a) t[a] = static_cast<std::int16_t>(sig.fwd[e].img[a]);
            p.cons.push_back({u, v, p.add_perm(std::move(t))});
        }
    }
    p.finalize();
    engine::Options eo;
    eo.node_budget = opts.node_budget;
    eo.static_prefix = opts.static_prefix;
    auto res = engine::solve(p, eo);
    SearchVerdict v;
    v.nodes = res.nodes;
    v.prefix_completions = res.prefix_completions;
    if (res.status == engine::Status::Sat) {
        v.status = SearchStatus::Colorable;
        Coloring c;
        for (auto x : res.values) c.values.push_back(x + 1);
        // verify on both arc directions
        for (int e = 0; e < sig.graph.m(); ++e) {
            auto [x, y] = sig.graph.edges[e];
            if (sig.fwd[e].apply(c.values[x] - 1) == c.values[y] - 1 ||
                sig.fwd[e].inverse().apply(c.values[y] - 1) == c.values[x] - 1)
                throw std::logic_error("solve_gsg: witness failed verification");
        }
        v.witness = std::move(c);
    } else if (res.status == engine::Status::Unsat) {
        v.status = SearchStatus::NotColorable;
        v.certificate = "exhaustive backtracking closed the search space";
    } else {
        v.status = SearchStatus::BudgetExhausted;
    }
    return v;
}

namespace {

std::vector<int> spanning_forest_edges(const Graph& g) {
    std::vector<int> seen(g.n, 0), out;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::vector<int> queue{s};
        for (size_t h = 0; h < queue.size(); ++h)
            for (int w : g.adj[queue[h]])
                if (!seen[w]) {
                    seen[w] = 1;
                    out.push_back(g.edge_index(queue[h], w));
                    queue.push_back(w);
                }
    }
    return out;
}

}  // namespace

GsgDecision decide_s_colorable(const Graph& g, const PermSet& s, const GsgDecideOptions& opts) {
    GsgDecision d;
    if (!s.is_inverse_closed()) {
        d.note = "signature set must be inverse closed";
        return d;
    }
    const int m = g.m();
    std::vector<int> free_edges;  // edges ranging over S
    std::vector<int> fixed_identity(m, 0);
    bool group = s.is_group();
    if (group) {
        for (int e : spanning_forest_edges(g)) fixed_identity[e] = 1;
        for (int e = 0; e < m; ++e)
            if (!fixed_identity[e]) free_edges.push_back(e);
    } else {
        for (int e = 0; e < m; ++e) free_edges.push_back(e);
    }

    const std::uint64_t base = s.members.size();
    double log_total = free_edges.size() * std::log2(static_cast<double>(base));
    if (log_total > 62) {
        d.status = DecideStatus::Inconclusive;
        d.note = "signature space too large";
        return d;
    }
    std::uint64_t total = 1;
    for (size_t i = 0; i < free_edges.size(); ++i) total *= base;
    if (total > opts.max_signatures) {
        d.status = DecideStatus::Inconclusive;
        d.note = "signature count exceeds budget";
        return d;
    }

    auto signature_for = [&](std::uint64_t idx) {
        std::vector<Permutation> fwd(m, Permutation::identity(s.k));
        std::uint64_t x = idx;
        for (int e : free_edges) {
            fwd[e] = s.members[x % base];
            x /= base;
        }
        return PermSignature(g, s.k, std::move(fwd));
    };
    auto check = [&](std::uint64_t idx) {
        SolveOptions so;
        so.node_budget = opts.node_budget;
        auto v = solve_gsg(signature_for(idx), so);
        if (v.status == SearchStatus::BudgetExhausted)
            throw BudgetError("gsg decide: per-signature node budget exhausted");
        return v.colorable();
    };

    try {
        std::uint64_t failing = total;
        if (opts.jobs <= 1) {
            for (std::uint64_t i = 0; i < total; ++i) {
                ++d.signatures_checked;
                if (!check(i)) {
                    failing = i;
                    break;
                }
            }
        } else {
            const std::uint64_t block = 2048;
            for (std::uint64_t lo = 0; lo < total && failing == total; lo += block) {
                std::uint64_t hi = std::min(total, lo + block);
                int jobs = std::max(1, opts.jobs);
                std::vector<std::future<std::uint64_t>> futs;
                std::uint64_t chunk = (hi - lo + jobs - 1) / jobs;
                for (int j = 0; j < jobs; ++j) {
                    std::uint64_t a = lo + j * chunk, b = std::min(hi, a + chunk);
                    if (a >= b) break;
                    futs.push_back(std::async(std::launch::async, [&, a, b]() {
                        for (std::uint64_t i = a; i < b; ++i)
                            if (!check(i)) return i;
                        return total;
                    }));
                }
                std::uint64_t first = total;
                for (auto& f : futs) first = std::min(first, f.get());
                d.signatures_checked = (first == total) ? hi : first + 1;
                if (first != total) failing = first;
            }
        }
        if (failing != total) {
            d.status = DecideStatus::No;
            d.counterexample = signature_for(failing);
        } else {
            d.status = DecideStatus::Yes;
        }
    } catch (const BudgetError& e) {
        d.status = DecideStatus::Inconclusive;
        d.note = e.what();
    }
    return d;
}

}  // namespace lchoose
