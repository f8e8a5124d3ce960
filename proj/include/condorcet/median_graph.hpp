#pragma once

#include <string>
#include <utility>
#include <vector>

#include "condorcet/graph.hpp"

namespace condorcet {

/// Mulder expansion data: W1 and W2 are vertex subsets of the graph being
/// expanded. A valid step has W1 u W2 = V, W1 n W2 nonempty, no edges
/// between W1\W2 and W2\W1, and both sets geodesically convex.
struct ExpansionStep {
    std::vector<int> w1;
    std::vector<int> w2;
};

/// Names every violated validity clause; empty means the step is valid.
std::vector<std::string> expansion_step_violations(const Graph& g, const ExpansionStep& step);

/// Convex expansion of g. Vertex numbering of the result: every original
/// vertex keeps its id (for v in W1 n W2 it becomes the W1-side copy v^1),
/// and the W2-side copies v^2 are appended after g.n in increasing v.
/// Throws std::invalid_argument listing the violated clauses.
Graph apply_expansion(const Graph& g, const ExpansionStep& step);

/// All median graphs with at most max_vertices vertices, up to
/// isomorphism, generated from K1 by convex expansions. Guarded at 8.
std::vector<Graph> generate_median_graphs(int max_vertices);

/// Contracts the Theta-class (halfspace pair) of the given edge and
/// returns the contracted graph together with the expansion step that
/// reproduces g. Precondition: g is a median graph.
std::pair<Graph, ExpansionStep> halfspace_contract(const Graph& g, std::pair<int, int> edge);

/// Expansion steps from K1 whose replay yields a graph isomorphic to g,
/// obtained by repeatedly contracting the halfspace pair of the
/// lexicographically first edge. Precondition: g is a median graph.
std::vector<ExpansionStep> decompose(const Graph& g);

}  // namespace condorcet
