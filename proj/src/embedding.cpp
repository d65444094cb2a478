#include "lchoose/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lchoose {

std::vector<int> FaceWalk::boundary_vertices() const {
    std::vector<int> out;
    for (auto [v, e] : arcs) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> FaceWalk::boundary_edges() const {
    std::vector<int> out;
    for (auto [v, e] : arcs) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EmbeddedGraph::EmbeddedGraph(Graph g, std::vector<std::vector<int>> rot)
    : graph(std::move(g)), rotation(std::move(rot)) {
    if (static_cast<int>(rotation.size()) != graph.n)
        throw std::invalid_argument("embedding: rotation size != n");
    for (int v = 0; v < graph.n; ++v) {
        std::vector<int> have = rotation[v];
        std::sort(have.begin(), have.end());
        std::vector<int> want;
        for (int w : graph.adj[v]) want.push_back(graph.edge_index(v, w));
        std::sort(want.begin(), want.end());
        if (have != want)
            throw std::invalid_argument("embedding: rotation at vertex " + std::to_string(v) +
                                        " does not list its incident edges exactly once");
    }
}

std::vector<FaceWalk> EmbeddedGraph::faces() const {
    // position of edge e in rotation[v]
    std::map<std::pair<int, int>, int> pos;
    for (int v = 0; v < graph.n; ++v)
        for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i)
            pos[{v, rotation[v][i]}] = i;

    auto other_end = [&](int e, int v) {
        auto [a, b] = graph.edges[e];
        return a == v ? b : a;
    };

    // arc = (tail, edge). Next arc: enter head w via edge e, leave along the
    // successor of e in rotation[w].
    std::map<std::pair<int, int>, bool> used;
    std::vector<FaceWalk> out;
    for (int v = 0; v < graph.n; ++v)
        for (int e : rotation[v]) {
            if (used[{v, e}]) continue;
            FaceWalk f;
            int cv = v, ce = e;
            while (!used[{cv, ce}]) {
                used[{cv, ce}] = true;
                f.arcs.push_back({cv, ce});
                int w = other_end(ce, cv);
                int i = pos[{w, ce}];
                int ne = rotation[w][(i + 1) % rotation[w].size()];
                cv = w;
                ce = ne;
            }
            out.push_back(std::move(f));
        }
    return out;
}

bool EmbeddedGraph::euler_ok() const {
    // Face walks are per component, so each component contributes V-E+F = 2.
    int f = static_cast<int>(faces().size());
    int c = static_cast<int>(graph.components().size());
    return graph.n - graph.m() + f == 2 * c;
}

int DualGraph::degree(int face) const {
    int d = 0;
    for (auto [a, b] : endpoints) d += (a == face) + (b == face);
    return d;
}

std::vector<int> DualGraph::subgraph_component_of(const std::vector<int>& dual_edges) const {
    std::vector<int> comp(face_count);
    std::iota(comp.begin(), comp.end(), 0);
    // union-find, tiny scale
    std::vector<int> parent(face_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e : dual_edges) {
        auto [a, b] = endpoints[e];
        parent[find(a)] = find(b);
    }
    for (int f = 0; f < face_count; ++f) comp[f] = find(f);
    return comp;
}

DualGraph dual(const EmbeddedGraph& e) {
    if (!e.graph.is_connected())
        throw std::invalid_argument("dual: graph must be connected");
    DualGraph d;
    d.face_walks = e.faces();
    d.face_count = static_cast<int>(d.face_walks.size());
    d.endpoints.assign(e.graph.m(), {-1, -1});
    for (int f = 0; f < d.face_count; ++f)
        for (auto [v, edge] : d.face_walks[f].arcs) {
            if (d.endpoints[edge].first < 0)
                d.endpoints[edge].first = f;
            else
                d.endpoints[edge].second = f;
        }
    for (auto [a, b] : d.endpoints)
        if (a < 0 || b < 0) throw std::logic_error("dual: arc pairing failed");
    return d;
}

}  // namespace lchoose
