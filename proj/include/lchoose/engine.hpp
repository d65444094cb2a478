#ifndef LCHOOSE_ENGINE_HPP
#define LCHOOSE_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace lchoose::engine {

/// Small dynamic bitset over a fixed width.
struct Bits {
    std::vector<std::uint64_t> w;

    static Bits full(int width);
    static Bits empty(int width);
    bool test(int i) const { return w[i >> 6] >> (i & 63) & 1ull; }
    void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    int count() const;
    int first() const;  // lowest set bit, -1 if none
    bool any() const;
};

/// Value constraint network: vertices take values 0..width-1 from their
/// domains; each constraint forbids value pairs (a, fwd[a]) across an edge.
/// fwd must be a bijection on [width] (identity when perm < 0).
struct Problem {
    int n = 0;
    int width = 0;
    std::vector<Bits> domains;
    struct Con {
        int u = 0, v = 0;
        int perm = -1;  // index into perms, -1 = identity
    };
    std::vector<Con> cons;
    std::vector<std::vector<std::int16_t>> perms;      // value of u -> forbidden value of v
    std::vector<std::vector<std::int16_t>> perms_inv;  // filled by finalize()

    void add_identity_edge(int u, int v) { cons.push_back({u, v, -1}); }
    int add_perm(std::vector<std::int16_t> fwd);  // returns perm index
    void finalize();                              // builds inverses, checks bijectivity
};

enum class Status { Sat, Unsat, Budget };

struct Options {
    std::uint64_t node_budget = 0;   // 0 = unlimited branch nodes
    std::vector<int> static_prefix;  // branch these vertices first, in order
};

struct Result {
    Status status = Status::Unsat;
    std::vector<std::int16_t> values;  // valid when Sat
    std::uint64_t nodes = 0;
    std::uint64_t prefix_completions = 0;
};

/// Complete backtracking search: static prefix in the given order, then
/// smallest-domain-first with forced-singleton propagation and independent
/// solving of disconnected residual components.
Result solve(const Problem& p, const Options& opts = {});

/// Exact solution count (plain DFS in vertex-index order). Throws BudgetError
/// past node_budget.
std::uint64_t count(const Problem& p, std::uint64_t node_budget);

/// Visit every solution in lexicographic (vertex-index, value) order until the
/// visitor returns false. Returns number visited.
std::uint64_t enumerate(const Problem& p,
                        const std::function<bool(const std::vector<std::int16_t>&)>& visit);

}  // namespace lchoose::engine

#endif
