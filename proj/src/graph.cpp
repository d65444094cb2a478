#include "lchoose/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lchoose {

Graph::Graph(int n_, std::vector<Edge> edge_list) : n(n_) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("graph: parallel edge");
    edges = std::move(edge_list);
    adj.assign(n, {});
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
    if (it == edges.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges.begin());
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool Graph::is_connected() const { return n <= 1 || components().size() == 1; }

bool VertexPartition::valid_for(const Graph& g) const {
    std::vector<int> seen(g.n, 0);
    for (const auto& b : blocks)
        for (int v : b) {
            if (v < 0 || v >= g.n || seen[v]) return false;
            seen[v] = 1;
        }
    return std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; });
}

bool VertexPartition::blocks_independent(const Graph& g) const {
    for (const auto& b : blocks)
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j)
                if (g.has_edge(b[i], b[j])) return false;
    return true;
}

Graph make_complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph make_edgeless(int n) { return Graph(n, {}); }

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
    return Graph(n, std::move(e));
}

Graph make_path(int n) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return Graph(n, std::move(e));
}

Graph make_complete_bipartite(int m, int n) {
    std::vector<Edge> e;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) e.push_back({u, m + v});
    return Graph(m + n, std::move(e));
}

Graph make_complete_multipartite(const std::vector<int>& part_sizes) {
    std::vector<Graph> parts;
    parts.reserve(part_sizes.size());
    for (int s : part_sizes) parts.push_back(make_edgeless(s));
    return join(parts).graph;
}

JoinResult join(const std::vector<Graph>& parts) {
    if (parts.empty()) throw std::invalid_argument("join: no parts");
    JoinResult r;
    std::vector<int> offset(parts.size(), 0);
    int n = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        offset[i] = n;
        n += parts[i].n;
    }
    std::vector<Edge> e;
    r.part_of.assign(n, 0);
    r.part_vertices.resize(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
        for (auto [u, v] : parts[i].edges) e.push_back({u + offset[i], v + offset[i]});
        for (int v = 0; v < parts[i].n; ++v) {
            r.part_of[offset[i] + v] = static_cast<int>(i);
            r.part_vertices[i].push_back(offset[i] + v);
        }
    }
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            for (int u = 0; u < parts[i].n; ++u)
                for (int v = 0; v < parts[j].n; ++v)
                    e.push_back({u + offset[i], v + offset[j]});
    r.graph = Graph(n, std::move(e));
    return r;
}

LineGraph line_graph(const Graph& g) {
    LineGraph lg;
    lg.source_edge = g.edges;
    int m = g.m();
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = g.edges[i];
            auto [c, d] = g.edges[j];
            if (a == c || a == d || b == c || b == d) e.push_back({i, j});
        }
    lg.graph = Graph(m, std::move(e));
    return lg;
}

std::vector<Edge> canonical_form(const Graph& g) {
    if (g.n > 8) throw std::invalid_argument("canonical_form: n > 8");
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::vector<Edge>> best;
    do {
        std::vector<Edge> mapped;
        mapped.reserve(g.edges.size());
        for (auto [u, v] : g.edges) {
            int a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            mapped.push_back({a, b});
        }
        std::sort(mapped.begin(), mapped.end());
        if (!best || mapped < *best) best = std::move(mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best ? *best : std::vector<Edge>{};
}

}  // namespace lchoose
