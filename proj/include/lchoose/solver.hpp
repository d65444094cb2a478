#ifndef LCHOOSE_SOLVER_HPP
#define LCHOOSE_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lchoose/assignment.hpp"
#include "lchoose/graph.hpp"
#include "lchoose/partition.hpp"

namespace lchoose {

enum class SearchStatus { Colorable, NotColorable, BudgetExhausted };

struct SearchVerdict {
    SearchStatus status = SearchStatus::NotColorable;
    std::optional<Coloring> witness;  // present iff Colorable, independently verified
    std::uint64_t nodes = 0;
    std::uint64_t prefix_completions = 0;
    std::string certificate;  // NotColorable: exhaustion statement

    bool colorable() const { return status == SearchStatus::Colorable; }
};

struct SolveOptions {
    std::uint64_t node_budget = 0;   // 0 = unlimited
    std::vector<int> static_prefix;  // branch these vertices first, in this order
};

SearchVerdict solve_list(const Graph& g, const ListAssignment& a, const SolveOptions& opts = {});
SearchVerdict solve_k(const Graph& g, int k, const SolveOptions& opts = {});

/// Edge lists are indexed like g.edges; the witness colors edge i at values[i].
SearchVerdict solve_list_edges(const Graph& g, const ListAssignment& edge_lists,
                               const SolveOptions& opts = {});

/// Exact number of proper maps V -> {1..k}. Guard: |V| <= 30; throws
/// BudgetError past the node budget.
std::uint64_t count_colorings(const Graph& g, int k, std::uint64_t node_budget = 100'000'000);

/// All proper maps V -> {1..k} in lexicographic order, at most `limit`.
std::vector<Coloring> enumerate_colorings(const Graph& g, int k, std::size_t limit);

enum class DecideStatus { Yes, No, Inconclusive };

struct LambdaDecision {
    DecideStatus status = DecideStatus::Inconclusive;
    std::optional<LambdaAssignment> counterexample;  // first failing, canonical order
    std::uint64_t assignments_checked = 0;
    std::string note;

    bool choosable() const { return status == DecideStatus::Yes; }
};

struct DecideOptions {
    int budget_cells = 24;
    std::uint64_t max_assignments = 10'000'000;
    int jobs = 1;
};

/// Iterates canonical special lambda-assignments (Lemma-1.1 normal form for
/// unit parts) and solves each; false returns the first uncolorable one.
LambdaDecision decide_lambda_choosable(const Graph& g, const IntPartition& lambda,
                                       const DecideOptions& opts = {});

namespace detail {
/// List-coloring feasibility on bitmask lists (n <= 31, palette <= 64).
/// Independent of the engine path; decide_lambda_choosable's inner loop.
bool masks_colorable(int n, const std::vector<std::uint32_t>& adj,
                     const std::vector<std::uint64_t>& lists);
}  // namespace detail

}  // namespace lchoose

#endif
