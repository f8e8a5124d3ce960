#include "condorcet/domain_graph.hpp"

#include <cstdint>
#include <stdexcept>

#include "condorcet/common.hpp"

namespace condorcet {

namespace {

// between[q][i][j] packed as bitmasks over q; |d| <= 64 keeps one word per pair.
struct BetweenTable {
    int m = 0;
    std::vector<std::uint64_t> interval_mask;  // [i*m+j]

    explicit BetweenTable(const Domain& d) : m(d.size()) {
        if (m > 64) throw guard_exceeded("interval table: refusing a domain with more than 64 orders");
        interval_mask.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                std::uint64_t mask = 0;
                for (int q = 0; q < m; ++q)
                    if (is_between(d.at(q), d.at(i), d.at(j))) mask |= (std::uint64_t{1} << q);
                at(i, j) = mask;
                at(j, i) = mask;
            }
    }

    std::uint64_t& at(int i, int j) {
        return interval_mask[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                             static_cast<std::size_t>(j)];
    }
    std::uint64_t get(int i, int j) const {
        return interval_mask[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                             static_cast<std::size_t>(j)];
    }
    bool between(int q, int i, int j) const { return (get(i, j) >> q) & 1; }
};

}  // namespace

DomainGraph build_graph(const Domain& d, unsigned jobs) {
    const int m = d.size();
    BetweenTable table(d);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const std::uint64_t pair_mask = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
            if (table.get(i, j) == pair_mask) edges.emplace_back(i, j);
        }
    return DomainGraph(d, Graph::make(m, std::move(edges), jobs));
}

bool geodesic_between(const DomainGraph& g, const LinearOrder& q, const LinearOrder& r,
                      const LinearOrder& rp) {
    const auto iq = g.domain().index_of(q);
    const auto ir = g.domain().index_of(r);
    const auto irp = g.domain().index_of(rp);
    if (!iq || !ir || !irp)
        throw std::invalid_argument("geodesic_between: order is not a vertex of the graph");
    return geodesic_between(g.graph(), *iq, *ir, *irp);
}

bool is_connected_domain(const Domain& d) {
    const DomainGraph g = build_graph(d);
    for (const auto& [u, v] : g.graph().edges)
        if (!are_universal_neighbors(d.at(u), d.at(v))) return false;
    return true;
}

bool betweenness_coincides(const Domain& d) {
    const DomainGraph g = build_graph(d);
    const int m = d.size();
    for (int q = 0; q < m; ++q)
        for (int r = 0; r < m; ++r)
            for (int rp = 0; rp < m; ++rp)
                if (is_between(d.at(q), d.at(r), d.at(rp)) !=
                    geodesic_between(g.graph(), q, r, rp))
                    return false;
    return true;
}

GeometricReport check_geometric(const Domain& d) {
    const BetweenTable table(d);
    const int m = d.size();
    GeometricReport report;
    auto record = [&](int axiom, std::array<int, 4> quad) {
        report.holds = false;
        ++report.violation_count;
        if (report.witnesses.size() < 10) report.witnesses.push_back({axiom, quad});
    };
    // (A.1) [v,v] = {v}
    for (int v = 0; v < m; ++v)
        if (table.get(v, v) != (std::uint64_t{1} << v)) record(1, {v, -1, -1, -1});
    // (A.2) u in [v,w]  =>  [v,u] subseteq [v,w]
    for (int v = 0; v < m; ++v)
        for (int w = 0; w < m; ++w) {
            const std::uint64_t vw = table.get(v, w);
            for (int u = 0; u < m; ++u)
                if (table.between(u, v, w) && (table.get(v, u) & ~vw) != 0)
                    record(2, {v, w, u, -1});
        }
    // (A.3) t,u in [v,w] and t in [v,u]  =>  u in [t,w]
    for (int v = 0; v < m; ++v)
        for (int w = 0; w < m; ++w)
            for (int t = 0; t < m; ++t) {
                if (!table.between(t, v, w)) continue;
                for (int u = 0; u < m; ++u)
                    if (table.between(u, v, w) && table.between(t, v, u) &&
                        !table.between(u, t, w))
                        record(3, {v, w, t, u});
            }
    return report;
}

TriangleReport check_triangle_condition(const Domain& d) {
    const BetweenTable table(d);
    const int m = d.size();
    TriangleReport report;
    auto is_edge = [&](int i, int j) {
        return table.get(i, j) == ((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
    };
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            for (int w = v + 1; w < m; ++w) {
                const bool premise =
                    (table.get(u, v) & table.get(v, w)) == (std::uint64_t{1} << v) &&
                    (table.get(v, w) & table.get(w, u)) == (std::uint64_t{1} << w) &&
                    (table.get(w, u) & table.get(u, v)) == (std::uint64_t{1} << u);
                if (!premise) continue;
                ++report.premise_count;
                if (report.premise_triples.size() < 10) report.premise_triples.push_back({u, v, w});
                const int edge_count =
                    (is_edge(u, v) ? 1 : 0) + (is_edge(v, w) ? 1 : 0) + (is_edge(w, u) ? 1 : 0);
                if (edge_count != 0 && edge_count != 3) {
                    report.edge_implication_holds = false;
                    ++report.implication_violation_count;
                    if (report.implication_violations.size() < 10)
                        report.implication_violations.push_back({u, v, w});
                }
            }
    return report;
}

}  // namespace condorcet
