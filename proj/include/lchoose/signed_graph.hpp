#ifndef LCHOOSE_SIGNED_GRAPH_HPP
#define LCHOOSE_SIGNED_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lchoose/graph.hpp"
#include "lchoose/solver.hpp"

namespace lchoose {

/// Graph with a +-1 sign per edge, aligned with graph.edges.
struct SignedGraph {
    Graph graph;
    std::vector<int> sign;

    SignedGraph() = default;
    SignedGraph(Graph g, std::vector<int> s);
    int sign_of(int u, int v) const;
};

/// N_k = {1,-1,...,q,-q} for k=2q, plus 0 for k=2q+1. Sorted ascending.
std::vector<int> nk_palette(int k);
/// Z_k = {0..k-1}; negation is x -> (k-x) mod k.
std::vector<int> zk_palette(int k);

/// Search for f: V -> N_k with f(x) != sign(e) * f(y) on every edge.
SearchVerdict solve_signed_k(const SignedGraph& sg, int k, const SolveOptions& opts = {});
/// Search for f: V -> Z_k with f(x) != sign(e) * f(y) (mod k) on every edge.
SearchVerdict solve_signed_zk(const SignedGraph& sg, int k, const SolveOptions& opts = {});
/// Z_k search with per-vertex domain restrictions (values from Z_k).
SearchVerdict solve_signed_zk_restricted(const SignedGraph& sg, int k,
                                         const std::vector<std::vector<int>>& allowed,
                                         const SolveOptions& opts = {});

/// Flip signs on edges with exactly one endpoint in s.
SignedGraph switched(const SignedGraph& sg, const std::vector<int>& s);

enum class SignedMode { Nk, Zk };

struct SignedDecideOptions {
    std::uint64_t max_classes = 1u << 22;
    std::uint64_t node_budget = 0;  // per signature solve; 0 = unlimited
    int jobs = 1;
};

struct SignedDecision {
    DecideStatus status = DecideStatus::Inconclusive;
    std::optional<SignedGraph> counterexample;  // first failing signature
    std::uint64_t classes_checked = 0;
    std::string note;

    bool colorable_for_all() const { return status == DecideStatus::Yes; }
};

/// Decides "every signature of g is k-colorable" in the chosen mode. One
/// representative per switching class: spanning-forest edges are positive,
/// co-tree edges range over all sign patterns.
SignedDecision decide_signed_colorable(const Graph& g, int k, SignedMode mode,
                                       const SignedDecideOptions& opts = {});

/// True iff every Z4-coloring f of h has f(u) or f(v) in {0,2}. Guard n <= 16.
bool verify_gadget(const SignedGraph& h, int u, int v);

struct Gadget {
    SignedGraph h;
    int base_u = 0, base_v = 1;
    int top = 2;
};

struct GadgetSearchOptions {
    std::uint64_t seed = 20210313;
    int restarts = 400;
    int steps_per_restart = 4000;
};

/// Looks for a gadget with a positive base edge uv passing verify_gadget.
/// Exhaustive for max_vertices <= 4, seeded hill-climbing above that; returns
/// nullopt when nothing was found at this size within the budget.
std::optional<Gadget> search_gadget(int max_vertices, const GadgetSearchOptions& opts = {});

/// Where each copy's top vertex goes: -1 keeps it a fresh vertex, 0..3
/// identifies it with that K4 vertex, 4 merges it into one shared new vertex.
using WegnerPattern = std::array<int, 6>;
WegnerPattern default_wegner_pattern();
WegnerPattern fresh_tops_pattern();  // never conflicts, works for any gadget

/// The default pattern when the gadget's top edges allow it (identification
/// must not create an edge carrying both signs), fresh tops otherwise.
WegnerPattern compatible_wegner_pattern(const Gadget& gadget);

struct WegnerAssembly {
    SignedGraph sg;
    std::array<int, 4> k4_vertices{};
    std::vector<std::vector<int>> copy_vertex_of;  // per copy: gadget vertex -> assembled vertex
};

/// All-positive K4 plus six gadget copies, one per K4 edge, base edges
/// identified with the K4 edges and tops placed per the pattern.
WegnerAssembly assemble_wegner(const Gadget& gadget,
                               const WegnerPattern& pattern = default_wegner_pattern());

struct AssemblyReport {
    bool not_z4_colorable = false;
    bool k4_contradiction = false;
    std::uint64_t nodes = 0;

    bool verified() const { return not_z4_colorable && k4_contradiction; }
};

/// Full-solver refutation plus the K4-restriction argument: every assignment
/// of four distinct Z4 values to K4 leaves some edge with both ends in {1,3}.
AssemblyReport verify_assembly_not_z4(const WegnerAssembly& a);

}  // namespace lchoose

#endif
