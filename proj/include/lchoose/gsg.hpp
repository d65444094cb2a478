#ifndef LCHOOSE_GSG_HPP
#define LCHOOSE_GSG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lchoose/graph.hpp"
#include "lchoose/partition.hpp"
#include "lchoose/solver.hpp"

namespace lchoose {

/// Permutation of [k], stored as 0-based images.
struct Permutation {
    std::vector<int> img;

    static Permutation identity(int k);
    int k() const { return static_cast<int>(img.size()); }
    int apply(int x) const { return img[x]; }
    Permutation inverse() const;
    Permutation compose(const Permutation& inner) const;  // this(inner(x))
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return img < o.img; }

    std::string str() const;  // cycle notation, 1-based; "id" for identity
    // accepts "(12)(34)", "id", "()" or a 1-based image list "2,1,4,3"
    static Permutation parse(const std::string& s, int k);
};

/// Inverse-closed, non-empty set of permutations of [k].
struct PermSet {
    int k = 0;
    std::vector<Permutation> members;  // sorted, unique

    PermSet() = default;
    PermSet(int k, std::vector<Permutation> members);
    bool contains(const Permutation& p) const;
    bool is_inverse_closed() const;
    bool is_group() const;  // closed under composition (and hence contains id)
};

PermSet conjugate(const PermSet& s, const Permutation& pi);
/// Every point of [k] is fixed by at least one member.
bool fixes_each_point(const PermSet& s);
PermSet symmetric_group(int k);  // guard k <= 6

/// Block-preserving permutations of [k] for the interval blocks of lambda.
struct YoungSet {
    IntPartition partition;
    std::vector<std::pair<int, int>> intervals;  // [begin, end) per part, 0-based
    PermSet perms;
};
YoungSet young_set(const IntPartition& lambda);  // guard total <= 8

/// Permutation-valued signature: fwd[e] is sigma on edge e oriented from the
/// smaller to the larger endpoint; the reverse arc uses the inverse.
struct PermSignature {
    Graph graph;
    int k = 0;
    std::vector<Permutation> fwd;

    PermSignature() = default;
    PermSignature(Graph g, int k, std::vector<Permutation> fwd);
    Permutation arc(int from, int to) const;
};

/// Search for f: V -> [k] with sigma(e)(f(x)) != f(y) on every arc.
/// Witness colors are 1-based.
SearchVerdict solve_gsg(const PermSignature& sig, const SolveOptions& opts = {});

struct GsgDecideOptions {
    std::uint64_t max_signatures = 1u << 22;
    std::uint64_t node_budget = 0;
    int jobs = 1;
};

struct GsgDecision {
    DecideStatus status = DecideStatus::Inconclusive;
    std::optional<PermSignature> counterexample;
    std::uint64_t signatures_checked = 0;
    std::string note;

    bool colorable_for_all() const { return status == DecideStatus::Yes; }
};

/// Decides S-k-colorability: every S-signature of g is k-colorable. When S is
/// a group, spanning-forest edges are normalized to the identity and only
/// co-tree edges range over S; otherwise all edges do.
GsgDecision decide_s_colorable(const Graph& g, const PermSet& s,
                               const GsgDecideOptions& opts = {});

}  // namespace lchoose

#endif
