#ifndef LCHOOSE_GRAPH_HPP
#define LCHOOSE_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lchoose {

using Edge = std::pair<int, int>;  // stored normalized, first < second

/// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
/// Immutable after construction; labels are optional metadata.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;            // sorted, normalized
    std::vector<std::vector<int>> adj;  // sorted neighbor lists
    std::vector<std::string> labels;    // empty or size n

    Graph() = default;
    Graph(int n, std::vector<Edge> edge_list);

    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    // index into edges for {u,v}, or -1
    int edge_index(int u, int v) const;
    bool is_connected() const;
    std::vector<std::vector<int>> components() const;
};

struct VertexPartition {
    std::vector<std::vector<int>> blocks;
    // true iff blocks are disjoint and cover 0..n-1
    bool valid_for(const Graph& g) const;
    bool blocks_independent(const Graph& g) const;
};

Graph make_complete(int n);
Graph make_edgeless(int n);
Graph make_cycle(int n);  // rejects n < 3
Graph make_path(int n);
Graph make_complete_bipartite(int m, int n);
Graph make_complete_multipartite(const std::vector<int>& part_sizes);

/// Join of several graphs: disjoint union plus all edges between distinct parts.
struct JoinResult {
    Graph graph;
    std::vector<int> part_of;               // part index per vertex
    std::vector<std::vector<int>> part_vertices;
};
JoinResult join(const std::vector<Graph>& parts);

/// Line graph: one vertex per edge of g, adjacent iff edges share an endpoint.
struct LineGraph {
    Graph graph;
    std::vector<Edge> source_edge;  // source_edge[i] = edge of g behind vertex i
};
LineGraph line_graph(const Graph& g);

// Canonical form under vertex relabeling, brute force over permutations.
// Only for small graphs (n <= 8); used by tests and dedup utilities.
std::vector<Edge> canonical_form(const Graph& g);

}  // namespace lchoose

#endif
