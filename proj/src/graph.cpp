#include "condorcet/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "condorcet/common.hpp"

namespace condorcet {

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges, unsigned jobs) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    Graph g;
    g.n = n;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph must not have self-loops");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.adj.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : g.edges) {
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        g.adj[static_cast<std::size_t>(v)].push_back(u);
    }
    g.dist.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    parallel_chunks(static_cast<std::size_t>(n), jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::deque<int> queue;
        for (std::size_t s = begin; s < end; ++s) {
            int* row = g.dist.data() + s * static_cast<std::size_t>(n);
            row[s] = 0;
            queue.clear();
            queue.push_back(static_cast<int>(s));
            while (!queue.empty()) {
                const int v = queue.front();
                queue.pop_front();
                for (int w : g.adj[static_cast<std::size_t>(v)])
                    if (row[w] < 0) {
                        row[w] = row[v] + 1;
                        queue.push_back(w);
                    }
            }
        }
    });
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

bool is_connected(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.distance(0, v) < 0) return false;
    return true;
}

bool geodesic_between(const Graph& g, int q, int u, int v) {
    const int duv = g.distance(u, v);
    if (duv < 0) return false;
    const int duq = g.distance(u, q);
    const int dqv = g.distance(q, v);
    return duq >= 0 && dqv >= 0 && duq + dqv == duv;
}

std::optional<int> geodesic_median(const Graph& g, int u, int v, int w) {
    std::optional<int> found;
    for (int q = 0; q < g.n; ++q) {
        if (geodesic_between(g, q, u, v) && geodesic_between(g, q, u, w) &&
            geodesic_between(g, q, v, w)) {
            if (found) return std::nullopt;
            found = q;
        }
    }
    return found;
}

bool is_median_graph(const Graph& g) {
    if (!is_connected(g)) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u; v < g.n; ++v)
            for (int w = v; w < g.n; ++w)
                if (!geodesic_median(g, u, v, w)) return false;
    return true;
}

bool is_tree(const Graph& g) {
    return is_connected(g) && static_cast<int>(g.edges.size()) == g.n - 1;
}

bool is_chain(const Graph& g) {
    if (!is_tree(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_cycle(const Graph& g, int k) {
    if (g.n != k || k < 3) return false;
    if (static_cast<int>(g.edges.size()) != k) return false;
    if (!is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_convex_in_graph(const Graph& g, const std::vector<int>& subset) {
    std::vector<bool> in(static_cast<std::size_t>(g.n), false);
    for (int v : subset) in[static_cast<std::size_t>(v)] = true;
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            for (int q = 0; q < g.n; ++q)
                if (!in[static_cast<std::size_t>(q)] &&
                    geodesic_between(g, q, subset[a], subset[b]))
                    return false;
    return true;
}

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

bool extend_mapping(const Graph& g1, const Graph& g2, std::vector<int>& map,
                    std::vector<bool>& used, int v) {
    if (v == g1.n) return true;
    for (int w = 0; w < g2.n; ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        if (g1.degree(v) != g2.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g1.has_edge(u, v) != g2.has_edge(map[static_cast<std::size_t>(u)], w)) ok = false;
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used[static_cast<std::size_t>(w)] = true;
        if (extend_mapping(g1, g2, map, used, v + 1)) return true;
        used[static_cast<std::size_t>(w)] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> graph_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.n != g2.n || g1.edges.size() != g2.edges.size()) return std::nullopt;
    if (sorted_degrees(g1) != sorted_degrees(g2)) return std::nullopt;
    std::vector<int> map(static_cast<std::size_t>(g1.n), -1);
    std::vector<bool> used(static_cast<std::size_t>(g1.n), false);
    if (extend_mapping(g1, g2, map, used, 0)) return map;
    return std::nullopt;
}

}  // namespace condorcet
