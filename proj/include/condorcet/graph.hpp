#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace condorcet {

/// A simple undirected graph with its all-pairs distance table. Immutable
/// after make(); distances are BFS shortest paths, -1 when unreachable.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<std::vector<int>> adj;
    std::vector<int> dist;  // row-major n*n

    static Graph make(int n, std::vector<std::pair<int, int>> edges, unsigned jobs = 1);

    int distance(int u, int v) const { return dist[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }

    bool operator==(const Graph& other) const { return n == other.n && edges == other.edges; }
};

bool is_connected(const Graph& g);

/// q lies on a shortest path between u and v.
bool geodesic_between(const Graph& g, int q, int u, int v);

/// The unique vertex geodesically between all three pairs, when it exists.
std::optional<int> geodesic_median(const Graph& g, int u, int v, int w);

/// Connected and every vertex triple has exactly one geodesic median.
bool is_median_graph(const Graph& g);

bool is_chain(const Graph& g);
bool is_tree(const Graph& g);
bool is_cycle(const Graph& g, int k);

/// Backtracking isomorphism search with degree pruning; returns a mapping
/// of g1 vertices onto g2 vertices, or nothing.
std::optional<std::vector<int>> graph_isomorphic(const Graph& g1, const Graph& g2);

/// Geodesic convexity of a vertex subset.
bool is_convex_in_graph(const Graph& g, const std::vector<int>& subset);

}  // namespace condorcet
