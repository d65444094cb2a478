#ifndef LCHOOSE_EMBEDDING_HPP
#define LCHOOSE_EMBEDDING_HPP

#include <vector>

#include "lchoose/graph.hpp"

namespace lchoose {

/// A closed face walk. arcs[i] = (tail vertex, edge index); the head of
/// arcs[i] is the tail of arcs[i+1] (cyclically).
struct FaceWalk {
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> boundary_vertices() const;  // sorted, deduplicated
    std::vector<int> boundary_edges() const;     // sorted, deduplicated
};

/// Graph with a rotation system: rotation[v] is the cyclic order of edge
/// indices incident to v. Faces come from the next-arc traversal rule.
struct EmbeddedGraph {
    Graph graph;
    std::vector<std::vector<int>> rotation;

    EmbeddedGraph() = default;
    EmbeddedGraph(Graph g, std::vector<std::vector<int>> rot);

    std::vector<FaceWalk> faces() const;
    // V - E + F == 1 + #components (2 when connected)
    bool euler_ok() const;
};

/// Dual as a multigraph view: one vertex per face, one edge per primal edge.
/// The dual of a simple plane graph need not be simple, so this is not a
/// Graph; it exists for the Eulerian-subgraph machinery.
struct DualGraph {
    int face_count = 0;
    // endpoints[e] = faces on the two sides of primal edge e (may coincide)
    std::vector<std::pair<int, int>> endpoints;
    std::vector<FaceWalk> face_walks;

    int degree(int face) const;
    // components of the spanning subgraph on the given dual edge subset
    std::vector<int> subgraph_component_of(const std::vector<int>& dual_edges) const;
};

DualGraph dual(const EmbeddedGraph& e);  // rejects disconnected input

}  // namespace lchoose

#endif
