#ifndef LCHOOSE_TESTS_FIXTURES_HPP
#define LCHOOSE_TESTS_FIXTURES_HPP

#include "lchoose/signed_graph.hpp"

namespace fixtures {

// A 10-vertex signed gadget with positive base edge (0,1) and top vertex 2:
// every Z4-coloring places 0 or 2 on one of the base endpoints. Reconstructed
// from the forcing chain its case analysis needs; checked exhaustively by the
// tests (264 proper colorings, none with both base ends odd).
inline lchoose::Gadget gadget10() {
    using lchoose::Edge;
    // vertices: u=0 v=1 w=2 x1=3 x2=4 x3=5 x4=6 x5=7 y=8 z=9
    std::vector<std::pair<Edge, int>> signed_edges = {
        {{0, 1}, 1},                                                          // base
        {{0, 2}, 1}, {{0, 9}, 1}, {{0, 3}, 1}, {{0, 8}, 1}, {{0, 5}, 1},
        {{0, 7}, 1},
        {{1, 2}, 1}, {{1, 9}, 1}, {{1, 6}, -1}, {{1, 4}, -1},
        {{2, 3}, 1}, {{2, 4}, 1},
        {{9, 6}, 1}, {{9, 7}, 1},
        {{6, 7}, 1}, {{6, 5}, 1}, {{6, 8}, 1},
        {{3, 4}, 1}, {{3, 7}, 1}, {{3, 8}, 1},
        {{4, 8}, 1}, {{4, 5}, 1},
        {{5, 8}, 1},
        {{7, 8}, 1},
    };
    std::vector<Edge> es;
    for (auto& [e, s] : signed_edges) es.push_back(e);
    lchoose::Graph g(10, es);
    std::vector<int> sign(g.m());
    for (auto& [e, s] : signed_edges) sign[g.edge_index(e.first, e.second)] = s;
    return lchoose::Gadget{lchoose::SignedGraph(std::move(g), std::move(sign)), 0, 1, 2};
}

}  // namespace fixtures

#endif
