#include "condorcet/median_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "condorcet/common.hpp"

namespace condorcet {

namespace {

std::vector<bool> member_flags(int n, const std::vector<int>& subset, const char* what) {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int v : subset) {
        if (v < 0 || v >= n) throw std::invalid_argument(std::string(what) + ": vertex out of range");
        in[static_cast<std::size_t>(v)] = true;
    }
    return in;
}

}  // namespace

std::vector<std::string> expansion_step_violations(const Graph& g, const ExpansionStep& step) {
    std::vector<std::string> violations;
    const auto in1 = member_flags(g.n, step.w1, "expansion step W1");
    const auto in2 = member_flags(g.n, step.w2, "expansion step W2");
    bool covers = true;
    for (int v = 0; v < g.n; ++v)
        if (!in1[static_cast<std::size_t>(v)] && !in2[static_cast<std::size_t>(v)]) covers = false;
    if (!covers) violations.push_back("W1 and W2 do not cover the vertex set");
    bool meets = false;
    for (int v = 0; v < g.n; ++v)
        if (in1[static_cast<std::size_t>(v)] && in2[static_cast<std::size_t>(v)]) meets = true;
    if (!meets) violations.push_back("W1 and W2 have empty intersection");
    for (const auto& [u, v] : g.edges) {
        const bool u_only1 = in1[static_cast<std::size_t>(u)] && !in2[static_cast<std::size_t>(u)];
        const bool u_only2 = in2[static_cast<std::size_t>(u)] && !in1[static_cast<std::size_t>(u)];
        const bool v_only1 = in1[static_cast<std::size_t>(v)] && !in2[static_cast<std::size_t>(v)];
        const bool v_only2 = in2[static_cast<std::size_t>(v)] && !in1[static_cast<std::size_t>(v)];
        if ((u_only1 && v_only2) || (u_only2 && v_only1)) {
            violations.push_back("edge between W1\\W2 and W2\\W1");
            break;
        }
    }
    if (!is_convex_in_graph(g, step.w1)) violations.push_back("W1 is not convex");
    if (!is_convex_in_graph(g, step.w2)) violations.push_back("W2 is not convex");
    return violations;
}

Graph apply_expansion(const Graph& g, const ExpansionStep& step) {
    const auto violations = expansion_step_violations(g, step);
    if (!violations.empty()) {
        std::string message = "invalid expansion step:";
        for (const auto& v : violations) message += " [" + v + "]";
        throw std::invalid_argument(message);
    }
    const auto in1 = member_flags(g.n, step.w1, "W1");
    const auto in2 = member_flags(g.n, step.w2, "W2");
    // Second copies of the intersection vertices, appended in increasing order.
    std::vector<int> copy_id(static_cast<std::size_t>(g.n), -1);
    int next = g.n;
    for (int v = 0; v < g.n; ++v)
        if (in1[static_cast<std::size_t>(v)] && in2[static_cast<std::size_t>(v)])
            copy_id[static_cast<std::size_t>(v)] = next++;

    auto side1 = [&](int v) { return in1[static_cast<std::size_t>(v)] ? v : -1; };
    auto side2 = [&](int v) {
        if (!in2[static_cast<std::size_t>(v)]) return -1;
        return copy_id[static_cast<std::size_t>(v)] >= 0 ? copy_id[static_cast<std::size_t>(v)] : v;
    };

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.n; ++v)
        if (copy_id[static_cast<std::size_t>(v)] >= 0)
            edges.emplace_back(v, copy_id[static_cast<std::size_t>(v)]);
    for (const auto& [u, v] : g.edges) {
        const int u1 = side1(u), v1 = side1(v);
        const int u2 = side2(u), v2 = side2(v);
        if (u1 >= 0 && v1 >= 0) edges.emplace_back(u1, v1);
        if (u2 >= 0 && v2 >= 0) edges.emplace_back(u2, v2);
    }
    return Graph::make(next, std::move(edges));
}

std::pair<Graph, ExpansionStep> halfspace_contract(const Graph& g, std::pair<int, int> edge) {
    const auto [u, v] = edge;
    if (!g.has_edge(u, v)) throw std::invalid_argument("halfspace_contract: not an edge");
    // Halfspaces of the edge's Theta-class. Median graphs are bipartite,
    // so no vertex is equidistant from u and v.
    std::vector<int> side(static_cast<std::size_t>(g.n), 0);  // +1 near u, -1 near v
    for (int x = 0; x < g.n; ++x) {
        const int du = g.distance(x, u), dv = g.distance(x, v);
        if (du == dv)
            throw std::invalid_argument("halfspace_contract: graph is not bipartite-median");
        side[static_cast<std::size_t>(x)] = du < dv ? +1 : -1;
    }
    // Matching between the boundary vertices.
    std::vector<int> partner(static_cast<std::size_t>(g.n), -1);
    for (const auto& [a, b] : g.edges) {
        if (side[static_cast<std::size_t>(a)] == side[static_cast<std::size_t>(b)]) continue;
        const int x = side[static_cast<std::size_t>(a)] > 0 ? a : b;  // u-side endpoint
        const int y = side[static_cast<std::size_t>(a)] > 0 ? b : a;
        if (partner[static_cast<std::size_t>(x)] >= 0 || partner[static_cast<std::size_t>(y)] >= 0)
            throw std::invalid_argument("halfspace_contract: Theta-class is not a matching");
        partner[static_cast<std::size_t>(x)] = y;
        partner[static_cast<std::size_t>(y)] = x;
    }
    // Kept vertices: the u-side plus the unmatched v-side, renumbered in
    // increasing original id.
    std::vector<int> new_id(static_cast<std::size_t>(g.n), -1);
    int next = 0;
    for (int x = 0; x < g.n; ++x)
        if (side[static_cast<std::size_t>(x)] > 0 ||
            (side[static_cast<std::size_t>(x)] < 0 && partner[static_cast<std::size_t>(x)] < 0))
            new_id[static_cast<std::size_t>(x)] = next++;
    auto image = [&](int x) {
        if (new_id[static_cast<std::size_t>(x)] >= 0) return new_id[static_cast<std::size_t>(x)];
        return new_id[static_cast<std::size_t>(partner[static_cast<std::size_t>(x)])];
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges) {
        const int ia = image(a), ib = image(b);
        if (ia != ib) edges.emplace_back(ia, ib);
    }
    ExpansionStep step;
    for (int x = 0; x < g.n; ++x) {
        if (side[static_cast<std::size_t>(x)] > 0) step.w1.push_back(image(x));
        else step.w2.push_back(image(x));
    }
    std::sort(step.w1.begin(), step.w1.end());
    std::sort(step.w2.begin(), step.w2.end());
    step.w2.erase(std::unique(step.w2.begin(), step.w2.end()), step.w2.end());
    return {Graph::make(next, std::move(edges)), std::move(step)};
}

std::vector<ExpansionStep> decompose(const Graph& g) {
    if (!is_median_graph(g)) throw std::invalid_argument("decompose: not a median graph");
    // Contraction chain down to K1. raw[k] is valid on chain[k] and expands
    // it to a graph isomorphic to chain[k+1].
    std::vector<Graph> chain{g};
    std::vector<ExpansionStep> raw;
    Graph current = g;
    while (current.n > 1) {
        auto [contracted, step] = halfspace_contract(current, current.edges.front());
        raw.push_back(std::move(step));
        current = std::move(contracted);
        chain.push_back(current);
    }
    std::reverse(raw.begin(), raw.end());
    std::reverse(chain.begin(), chain.end());
    // Contraction and expansion number vertices differently, so replaying
    // needs each step re-expressed in the replayed graph's numbering.
    std::vector<ExpansionStep> steps;
    Graph replay = Graph::make(1, {});
    for (std::size_t k = 0; k < raw.size(); ++k) {
        const auto phi = graph_isomorphic(chain[k], replay);
        if (!phi) throw std::logic_error("decompose: replay lost isomorphism");
        ExpansionStep mapped;
        for (int v : raw[k].w1) mapped.w1.push_back((*phi)[static_cast<std::size_t>(v)]);
        for (int v : raw[k].w2) mapped.w2.push_back((*phi)[static_cast<std::size_t>(v)]);
        std::sort(mapped.w1.begin(), mapped.w1.end());
        std::sort(mapped.w2.begin(), mapped.w2.end());
        replay = apply_expansion(replay, mapped);
        steps.push_back(std::move(mapped));
    }
    return steps;
}

namespace {

// Cheap isomorphism-invariant prefilter key.
std::pair<std::vector<int>, std::vector<int>> iso_key(const Graph& g) {
    std::vector<int> degrees;
    for (int v = 0; v < g.n; ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    std::vector<int> dists(g.dist);
    std::sort(dists.begin(), dists.end());
    return {std::move(degrees), std::move(dists)};
}

}  // namespace

std::vector<Graph> generate_median_graphs(int max_vertices) {
    if (max_vertices < 1) throw std::invalid_argument("generate_median_graphs: need max_vertices >= 1");
    if (max_vertices > 8)
        throw guard_exceeded("generate_median_graphs: refusing more than 8 vertices");
    std::vector<Graph> result{Graph::make(1, {})};
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<std::size_t>> buckets;
    buckets[iso_key(result[0])].push_back(0);

    for (std::size_t i = 0; i < result.size(); ++i) {
        const Graph base = result[i];
        if (base.n >= max_vertices) continue;
        const std::uint32_t full = (1u << base.n) - 1u;
        for (std::uint32_t m1 = 1; m1 <= full; ++m1)
            for (std::uint32_t m2 = 1; m2 <= full; ++m2) {
                if ((m1 | m2) != full) continue;
                const std::uint32_t inter = m1 & m2;
                if (inter == 0) continue;
                if (base.n + __builtin_popcount(inter) > max_vertices) continue;
                ExpansionStep step;
                for (int v = 0; v < base.n; ++v) {
                    if (m1 & (1u << v)) step.w1.push_back(v);
                    if (m2 & (1u << v)) step.w2.push_back(v);
                }
                if (!expansion_step_violations(base, step).empty()) continue;
                Graph expanded = apply_expansion(base, step);
                auto& bucket = buckets[iso_key(expanded)];
                bool known = false;
                for (std::size_t idx : bucket)
                    if (graph_isomorphic(expanded, result[idx])) {
                        known = true;
                        break;
                    }
                if (!known) {
                    bucket.push_back(result.size());
                    result.push_back(std::move(expanded));
                }
            }
    }
    std::sort(result.begin(), result.end(), [](const Graph& a, const Graph& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.edges < b.edges;
    });
    return result;
}

}  // namespace condorcet
