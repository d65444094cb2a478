#ifndef LCHOOSE_ASSIGNMENT_HPP
#define LCHOOSE_ASSIGNMENT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lchoose/graph.hpp"
#include "lchoose/partition.hpp"

namespace lchoose {

/// Per-vertex color choice. values[v] is the color of vertex v.
struct Coloring {
    std::vector<int> values;
};

bool is_proper(const Graph& g, const Coloring& c);

/// Per-vertex finite color lists. Lists are kept sorted and duplicate-free.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<int>> l);

    int n() const { return static_cast<int>(lists.size()); }
    bool uniform_size(int k) const;
    std::vector<int> color_universe() const;  // sorted distinct colors
};

bool respects_lists(const ListAssignment& a, const Coloring& c);

/// Number of distinct lists, the ||L|| complexity measure.
int list_complexity(const ListAssignment& a);

/// A k-assignment whose color universe splits into groups, with every list
/// meeting group i in exactly partition.parts[i] colors. Group i corresponds
/// to partition part i (canonical non-increasing order).
struct LambdaAssignment {
    ListAssignment lists;
    IntPartition partition;
    std::vector<std::vector<int>> groups;  // sorted color sets
};

struct ValidationResult {
    bool ok = false;
    std::string message;  // names the first offending vertex/group
};
ValidationResult validate_lambda(const LambdaAssignment& a);

/// Per-vertex partial color translation; colors without an entry pass through.
struct TransferMap {
    std::string description;
    std::vector<std::map<int, int>> vertex_map;

    Coloring apply(const Coloring& c) const;
};

/// Lemma-1.1 normalization: every unit part's group collapses to one shared
/// color. The returned map translates a coloring of the specialized instance
/// back to a coloring of the original.
struct SpecializeResult {
    LambdaAssignment specialized;
    TransferMap back;
};
SpecializeResult specialize(const LambdaAssignment& a);

/// Lists of non-zero integers closed under negation.
struct SymmetricAssignment {
    ListAssignment lists;
};
bool is_symmetric(const ListAssignment& a);
ListAssignment symmetric_to_plain(const SymmetricAssignment& a);

// ---------------------------------------------------------------------------
// Canonical enumeration of lambda-assignments.
//
// Up to renaming colors inside a group, a group's lists are exactly a multiset
// of incidence columns (which vertices hold a color) with every vertex covered
// partition.parts[i] times. Enumerating those multisets with columns in
// decreasing mask order yields one representative per renaming orbit; equal
// part sizes additionally require non-increasing group encodings to kill the
// group-swap symmetry.
// ---------------------------------------------------------------------------

struct EnumOptions {
    int budget_cells = 24;               // guard on n * total(lambda)
    std::uint64_t max_assignments = 10'000'000;
    bool special_units = false;          // unit groups forced to one shared color
};

/// Palette layout of an enumerated assignment: colors are 1..palette, group i
/// owning the half-open range [group_begin[i]+1, group_begin[i+1]].
struct EnumLayout {
    int n = 0;
    int palette = 0;
    std::vector<int> group_begin;  // size q+1
};

/// Visit every canonical lambda-assignment. rows[v] is the color mask of
/// vertex v over the layout palette (bit c-1 = color c). Return false from the
/// visitor to stop early. Returns false iff stopped early.
/// Throws BudgetError when budgets are exceeded.
bool for_each_lambda_assignment(int n, const IntPartition& lambda, const EnumOptions& opts,
                                const std::function<bool(const std::vector<std::uint64_t>& rows,
                                                         const EnumLayout& layout)>& visit);

LambdaAssignment materialize_assignment(const std::vector<std::uint64_t>& rows,
                                        const EnumLayout& layout, const IntPartition& lambda);

/// Materialized stream, for inspection and tests.
std::vector<LambdaAssignment> enumerate_lambda_assignments(const Graph& g,
                                                           const IntPartition& lambda,
                                                           const EnumOptions& opts = {});

}  // namespace lchoose

#endif
