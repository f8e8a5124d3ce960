#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "condorcet/domain.hpp"
#include "condorcet/graph.hpp"

namespace condorcet {

/// The associated graph Gamma_D: vertices are the domain's orders in
/// canonical order, an edge joins R, R' iff [R,R'] within the domain is
/// exactly {R, R'}.
class DomainGraph {
public:
    DomainGraph(Domain domain, Graph graph)
        : domain_(std::move(domain)), graph_(std::move(graph)) {}

    const Domain& domain() const { return domain_; }
    const Graph& graph() const { return graph_; }
    const LinearOrder& order_at(int v) const { return domain_.at(v); }

private:
    Domain domain_;
    Graph graph_;
};

DomainGraph build_graph(const Domain& d, unsigned jobs = 1);

/// Geodesic betweenness of orders in the associated graph.
bool geodesic_between(const DomainGraph& g, const LinearOrder& q, const LinearOrder& r,
                      const LinearOrder& rp);

/// Every Gamma_D edge is a single adjacent transposition, i.e. Gamma_D is
/// a subgraph of the permutohedron.
bool is_connected_domain(const Domain& d);

/// Kemeny and geodesic betweenness agree on every ordered triple.
bool betweenness_coincides(const Domain& d);

/// One violated quadruple of a geometric-interval axiom; axiom is 1, 2 or
/// 3 for (A.1)-(A.3). Quad entries are domain indices (unused slots -1).
struct GeometricViolation {
    int axiom = 0;
    std::array<int, 4> quad{-1, -1, -1, -1};
};

struct GeometricReport {
    bool holds = true;
    std::size_t violation_count = 0;
    std::vector<GeometricViolation> witnesses;  // first 10
};

/// Checks the geometric interval axioms (A.1)-(A.3) for the domain's
/// interval operator over all quadruples. They hold for every domain, so
/// a failing report indicates a broken interval computation.
GeometricReport check_geometric(const Domain& d);

struct TriangleReport {
    /// Pairwise distinct triples satisfying the triangle premise (A.4),
    /// first 10 as domain indices.
    std::vector<std::array<int, 3>> premise_triples;
    std::size_t premise_count = 0;
    /// Whenever one interval of a premise triple is an edge, all three are.
    bool edge_implication_holds = true;
    std::vector<std::array<int, 3>> implication_violations;  // first 10
    std::size_t implication_violation_count = 0;
};

TriangleReport check_triangle_condition(const Domain& d);

}  // namespace condorcet
